"""scikit-learn style wrapper around the one-step certification."""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .certify import certify_step
from .validation import check_probability_vector


class LocalFlowCertifier(BaseEstimator):
    """Fit a graph-local probability flow carrying ``X`` to ``y``.

    Parameters
    ----------
    graph : DirectedGraph
    solver : {"maxflow", "lp"}
    capacity : {"unit", "amplitude"}
        Amplitude capacities need ``operator``.
    objective : {"max_stationary", "none"}
        Only used by the LP solver.
    operator : WalkOperator, optional
    tol : float
        Tolerance of the verification reports.

    Attributes
    ----------
    flow_ : ndarray of shape (N, N)
    current_ : ndarray of shape (N, N)
    stochastic_ : ndarray of shape (N, N)
        Column-stochastic, edge-supported transition matrix; ``predict`` applies it.
    certificate_ : StepCertificate
    """

    def __init__(self, graph, solver="maxflow", capacity="unit", objective="max_stationary",
                 operator=None, tol=1e-9):
        self.graph = graph
        self.solver = solver
        self.capacity = capacity
        self.objective = objective
        self.operator = operator
        self.tol = tol

    def fit(self, X, y):
        n = self.graph.n_vertices
        P = check_probability_vector(X, n, name="X")
        P_prime = check_probability_vector(y, n, name="y")
        self.certificate_ = certify_step(
            P, P_prime, self.graph, solver=self.solver, capacity=self.capacity,
            objective=self.objective, operator=self.operator, tol=self.tol,
        )
        self.flow_ = self.certificate_.flow
        self.current_ = self.certificate_.current
        self.stochastic_ = self.certificate_.stochastic
        self.n_features_in_ = n
        return self

    def predict(self, X):
        """Push distributions through the fitted transition matrix.

        ``X`` is one distribution of length N or a batch of shape (n_samples, N).
        """
        check_is_fitted(self, "stochastic_")
        X = np.asarray(X, dtype=float)
        if X.shape[-1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[-1]} vertices, expected {self.n_features_in_}")
        return X @ self.stochastic_.T

    def score(self, X, y):
        """Negative worst-case deviation of ``predict(X)`` from ``y``."""
        return -float(np.abs(self.predict(X) - np.asarray(y, dtype=float)).max())
