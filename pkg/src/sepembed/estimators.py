"""scikit-learn style front end.

``fit`` takes an ideal (see :func:`~sepembed.validation.check_ideal`) and
learns the structure; ``transform`` maps polynomials of the ambient ring.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cotangent import linear_part, linear_part_ideal, tangent_space
from .embed import search_optimal_reembedding
from .gfan import enumerate_gfan, sepdim
from .validation import check_ideal, check_point, check_polynomials


class SeparatingReembedder(TransformerMixin, BaseEstimator):
    """Find an optimal separating re-embedding and map polynomials through it.

    Parameters
    ----------
    ring : Ring, optional
        Needed only when generators are passed as strings.
    point : sequence of rationals, optional
        Point of the linear part; the origin by default.
    z : sequence of str, optional
        Variables to try first.
    use_fan : bool
        Cross-check the separating dimension on the Gröbner fan.
    cap : int
        Cone limit for the fan.
    """

    def __init__(self, ring=None, point=None, z=None, use_fan=False, cap=10_000):
        self.ring = ring
        self.point = point
        self.z = z
        self.use_fan = use_fan
        self.cap = cap

    def fit(self, X, y=None):
        ideal = check_ideal(X, self.ring)
        point = check_point(self.point, ideal.ring)
        self.ideal_ = ideal
        self.report_ = search_optimal_reembedding(ideal, point, self.use_fan, self.z, self.cap)
        self.reembedding_ = self.report_.reembedding
        self.z_ = self.report_.best_z
        self.edim_ = self.report_.edim
        self.sepdim_ = self.report_.sepdim
        self.n_variables_in_ = ideal.ring.n
        self.target_ring_ = self.reembedding_.target_ring if self.reembedding_ else ideal.ring
        return self

    def transform(self, X):
        """Normal forms of the images in the smaller ring."""
        check_is_fitted(self, "report_")
        polys = check_polynomials(X, self.ideal_.ring)
        if self.reembedding_ is None:
            return polys
        return [self.reembedding_.apply(f) for f in polys]

    def inverse_transform(self, X):
        check_is_fitted(self, "report_")
        polys = check_polynomials(X, self.target_ring_)
        if self.reembedding_ is None:
            return polys
        return [self.reembedding_.inverse(h) for h in polys]


class CotangentSpace(TransformerMixin, BaseEstimator):
    """Linear part, cotangent and tangent space of an ideal at a point."""

    def __init__(self, ring=None, point=None):
        self.ring = ring
        self.point = point

    def fit(self, X, y=None):
        ideal = check_ideal(X, self.ring)
        self.point_ = check_point(self.point, ideal.ring)
        self.ring_ = ideal.ring
        self.linear_part_ = linear_part_ideal(ideal, self.point_)
        self.lin_dim_ = self.linear_part_.dim
        self.cot_dim_ = ideal.ring.n - self.lin_dim_
        self.tangent_basis_ = tangent_space(ideal, self.point_)
        return self

    def transform(self, X):
        """Linear parts of the given polynomials at the fitted point."""
        check_is_fitted(self, "linear_part_")
        return [linear_part(f, self.point_) for f in check_polynomials(X, self.ring_)]


class GroebnerFanEnumerator(BaseEstimator):
    """Enumerate the restricted Gröbner fan and its leading-indeterminate classes."""

    def __init__(self, ring=None, cap=10_000, threads=1):
        self.ring = ring
        self.cap = cap
        self.threads = threads

    def fit(self, X, y=None):
        ideal = check_ideal(X, self.ring)
        self.fan_ = enumerate_gfan(ideal, cap=self.cap, threads=self.threads)
        self.n_cones_ = len(self.fan_)
        self.classes_ = self.fan_.classes
        self.sepdim_, self.witness_gb_ = sepdim(ideal, self.fan_)
        return self

    def export(self) -> str:
        check_is_fitted(self, "fan_")
        return self.fan_.export()
