"""prsplit - Peaceman-Rachford and Lie splitting for dissipative evolution equations.

Time integrators for semilinear problems u' = (A + F)u on periodic 2-D grids,
where A is a linear diffusion operator evaluated spectrally and F a pointwise
polynomial nonlinearity whose resolvent reduces to cubic equations. Ships the
Caginalp solidification and Gray-Scott pattern formation models and a CLI that
runs convergence-order studies and long pattern-formation simulations.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
