"""Canonical arrangement energies, forces, and rotation-induced changes.

The four canonical arrangements fix the two spin axes and the line of
centers; their energies are small integer combinations of the auxiliary
spectral function E(Omega):

    rr (spins along the line):        4[E(dO) + 2E(0)]
    uu (spins transverse, parallel):  E(dO) + 9E(sO) + 2E(0)
    ur (one along, one transverse):   8E(O_A) + 2E(O_B) + E(dO) + E(sO)
    uo (transverse, crossed):         2E(O_A) + 2E(O_B) + 4E(dO) + 4E(sO)

with dO = Omega_A - Omega_B and sO = Omega_A + Omega_B. At rest all four
reduce to E0 = 12 E(0). Forces follow exactly from the R^-6 law: no
numerical differentiation anywhere.
"""

import enum
from dataclasses import replace

import numpy as np

from . import spectral

__all__ = ["ArrangementKind", "Arrangement", "energy_rr", "energy_uu",
           "energy_ur", "energy_uo", "energy", "rest_energy", "force",
           "delta_force", "general_context"]

X_AXIS = (1.0, 0.0, 0.0)
Y_AXIS = (0.0, 1.0, 0.0)
Z_AXIS = (0.0, 0.0, 1.0)


class ArrangementKind(enum.Enum):
    RR = "rr"   # both spins along the line of centers
    UU = "uu"   # spins parallel, transverse to the line
    UR = "ur"   # A transverse, B along the line
    UO = "uo"   # spins crossed, both transverse
    GENERAL = "general"


# (axis_A, axis_B, rhat) for the canonical kinds
_CANONICAL_AXES = {
    ArrangementKind.RR: (Z_AXIS, Z_AXIS, Z_AXIS),
    ArrangementKind.UU: (Z_AXIS, Z_AXIS, X_AXIS),
    ArrangementKind.UR: (Z_AXIS, X_AXIS, X_AXIS),
    ArrangementKind.UO: (Z_AXIS, Y_AXIS, X_AXIS),
}


class Arrangement:
    """Geometric configuration of the two spin axes and the line of centers."""

    def __init__(self, kind, axis_a=None, axis_b=None, rhat=None):
        kind = ArrangementKind(kind)
        if kind is ArrangementKind.GENERAL:
            if axis_a is None or axis_b is None or rhat is None:
                raise ValueError("general arrangement needs axis_a, axis_b, rhat")
            self.axis_a, self.axis_b, self.rhat = (tuple(axis_a), tuple(axis_b),
                                                   tuple(rhat))
        else:
            if any(v is not None for v in (axis_a, axis_b, rhat)):
                raise ValueError(f"{kind.value} arrangement has fixed axes")
            self.axis_a, self.axis_b, self.rhat = _CANONICAL_AXES[kind]
        self.kind = kind

    def __repr__(self):
        return f"Arrangement({self.kind.value})"


def energy_rr(ctx, Omega_A, Omega_B, rel_tol=None):
    """Interaction energy, both spheres spinning along the line of centers (J).

    Depends only on the relative angular velocity: a common shift of both
    rotation rates leaves it invariant.
    """
    aux = spectral.aux_energy
    return 4.0 * (aux(ctx, Omega_A - Omega_B, rel_tol) + 2.0 * aux(ctx, 0.0, rel_tol))


def energy_uu(ctx, Omega_A, Omega_B, rel_tol=None):
    """Interaction energy, spins parallel and transverse to the line (J)."""
    aux = spectral.aux_energy
    return (aux(ctx, Omega_A - Omega_B, rel_tol)
            + 9.0 * aux(ctx, Omega_A + Omega_B, rel_tol)
            + 2.0 * aux(ctx, 0.0, rel_tol))


def energy_ur(ctx, Omega_A, Omega_B, rel_tol=None):
    """Interaction energy, A transverse and B along the line (J)."""
    aux = spectral.aux_energy
    return (8.0 * aux(ctx, Omega_A, rel_tol) + 2.0 * aux(ctx, Omega_B, rel_tol)
            + aux(ctx, Omega_A - Omega_B, rel_tol)
            + aux(ctx, Omega_A + Omega_B, rel_tol))


def energy_uo(ctx, Omega_A, Omega_B, rel_tol=None):
    """Interaction energy, spins crossed and both transverse to the line (J)."""
    aux = spectral.aux_energy
    return (2.0 * aux(ctx, Omega_A, rel_tol) + 2.0 * aux(ctx, Omega_B, rel_tol)
            + 4.0 * aux(ctx, Omega_A - Omega_B, rel_tol)
            + 4.0 * aux(ctx, Omega_A + Omega_B, rel_tol))


_ASSEMBLY = {
    ArrangementKind.RR: energy_rr,
    ArrangementKind.UU: energy_uu,
    ArrangementKind.UR: energy_ur,
    ArrangementKind.UO: energy_uo,
}


def general_context(ctx, arrangement, Omega_A, Omega_B):
    """PairContext with spin states installed for the direct tensor integral."""
    sa = replace(ctx.sphere_a, omega=float(Omega_A), axis=arrangement.axis_a)
    sb = replace(ctx.sphere_b, omega=float(Omega_B), axis=arrangement.axis_b)
    return spectral.PairContext(sa, sb, ctx.separation, arrangement.rhat)


def energy(ctx, arrangement, Omega_A, Omega_B, rel_tol=None):
    """Interaction energy for any arrangement (J).

    Canonical kinds use the cached auxiliary-function assemblies (each
    energy needs at most four spectral integrals, and repeated arguments
    hit the cache); the general kind falls back to the full tensor
    contraction of :func:`spinvdw.spectral.general_energy`.
    """
    if arrangement.kind is ArrangementKind.GENERAL:
        return spectral.general_energy(
            general_context(ctx, arrangement, Omega_A, Omega_B), rel_tol)
    return _ASSEMBLY[arrangement.kind](ctx, Omega_A, Omega_B, rel_tol)


def rest_energy(ctx, rel_tol=None):
    """vdW energy of the non-rotating pair, E0 = 12 E(0) (J)."""
    return 12.0 * spectral.aux_energy(ctx, 0.0, rel_tol)


def force(ctx, arrangement, Omega_A, Omega_B, rel_tol=None):
    """Radial force component (N); negative = attraction.

    Every energy term scales exactly as R^-6, so F = -dE/dR = 6E/R with no
    numerical differentiation.
    """
    return 6.0 * energy(ctx, arrangement, Omega_A, Omega_B, rel_tol) / ctx.separation


def delta_force(ctx, arrangement, Omega_A, Omega_B, rel_tol=None):
    """Rotation-induced force modification F(Omega) - F(0,0) (N).

    Positive values are a repulsive contribution relative to the static
    pair.
    """
    return (force(ctx, arrangement, Omega_A, Omega_B, rel_tol)
            - force(ctx, arrangement, 0.0, 0.0, rel_tol))
