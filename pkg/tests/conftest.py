import mpmath

from mirroratom import BoundaryCondition, MotionAxis

D, N = BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN
PAR, PERP = MotionAxis.PARALLEL, MotionAxis.PERPENDICULAR


def brace_reference(bc, axis, x):
    """Extended-precision (40 dps) direct evaluation of the brace expression."""
    with mpmath.workdps(40):
        x = mpmath.mpf(x)
        osc = mpmath.cos(2 * x) / (2 * x**2) - mpmath.sin(2 * x) / (4 * x**3)
        s = mpmath.sin(2 * x) / (2 * x)
        if (bc, axis) == (D, PAR):
            val = mpmath.mpf(2) / 3 + osc
        elif (bc, axis) == (D, PERP):
            val = mpmath.mpf(1) / 3 + osc + s
        elif (bc, axis) == (N, PAR):
            val = mpmath.mpf(1) / 3 - osc / 2
        else:
            val = mpmath.mpf(1) / 3 - osc - s
        return float(val)
