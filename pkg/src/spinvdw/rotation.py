"""Lab-frame response tensors of a spinning sphere.

A sphere spinning at angular velocity Omega about z turns its isotropic
rest-frame response xi(w) into an anisotropic lab-frame tensor through
rotational Doppler shifts w -> w +/- Omega:

    xi_xx = xi_yy = [xi(w+Omega) + xi(w-Omega)]/2
    xi_xy = -xi_yx = i[xi(w+Omega) - xi(w-Omega)]/2
    xi_zz = xi(w),  all other entries zero.

The same transform applies to the polarizability and to the Hadamard
spectrum. Applying it to eta while alpha transforms too means the lab-frame
pair no longer satisfies the equilibrium fluctuation-dissipation relation;
the modified relations implemented in :func:`noneq_fdt_hadamard` replace it.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .response import HBAR, K_B

__all__ = [
    "TensorKind", "ResponseTensor", "spin_transform", "axis_rotate",
    "noneq_fdt_hadamard", "rotation_matrix_to_axis", "fdt_weights",
]


class TensorKind(enum.Enum):
    POLARIZABILITY = "polarizability"
    HADAMARD = "hadamard"


@dataclass(frozen=True)
class ResponseTensor:
    """3x3 complex response tensor at a single lab-frame frequency.

    For kind POLARIZABILITY the off-diagonal block is antisymmetric
    (xy = -yx) and xx = yy. For kind HADAMARD the diagonal is real and the
    xy entry purely imaginary and odd in w.
    """

    entries: np.ndarray
    omega: float
    kind: TensorKind

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        if e.shape != (3, 3):
            raise ValueError(f"entries must be 3x3, got shape {e.shape}")
        object.__setattr__(self, "entries", e)

    @property
    def xx(self):
        return self.entries[0, 0]

    @property
    def xy(self):
        return self.entries[0, 1]

    @property
    def zz(self):
        return self.entries[2, 2]


def spin_entries(scalar_fn, Omega, omega):
    """Doppler components (xx, xy, zz) of the spin transform; vectorized in omega."""
    plus = scalar_fn(omega + Omega)
    minus = scalar_fn(omega - Omega)
    xx = 0.5 * (np.asarray(plus, dtype=complex) + minus)
    xy = 0.5j * (np.asarray(plus, dtype=complex) - minus)
    zz = np.asarray(scalar_fn(omega), dtype=complex)
    return xx, xy, zz


def _assemble(xx, xy, zz):
    out = np.zeros(np.shape(xx) + (3, 3), dtype=complex)
    out[..., 0, 0] = xx
    out[..., 1, 1] = xx
    out[..., 0, 1] = xy
    out[..., 1, 0] = -xy
    out[..., 2, 2] = zz
    return out


def spin_transform(scalar_fn, Omega, omega, kind=TensorKind.POLARIZABILITY):
    """Lab-frame response tensor of a sphere spinning about z.

    Parameters
    ----------
    scalar_fn : callable
        Rest-frame isotropic response (alpha or eta) as a function of
        angular frequency; must accept array arguments.
    Omega : float
        Rotation rate (rad/s, signed).
    omega : float
        Lab-frame angular frequency (rad/s).
    kind : TensorKind

    Returns
    -------
    ResponseTensor
        With the rotation axis along z.
    """
    xx, xy, zz = spin_entries(scalar_fn, Omega, float(omega))
    return ResponseTensor(_assemble(xx, xy, zz), float(omega), kind)


def rotation_matrix_to_axis(axis, spin=0.0):
    """A proper rotation mapping z to ``axis``.

    ``spin`` adds an extra rotation about z before tilting; any value gives
    a valid map, and results of :func:`axis_rotate` are independent of it
    because the source tensor is axially symmetric about z.
    """
    axis = np.asarray(axis, dtype=float)
    n = np.linalg.norm(axis)
    if abs(n - 1.0) > 1e-12:
        raise ValueError(f"axis must be a unit vector, |axis| = {n}")
    cs, ss = math.cos(spin), math.sin(spin)
    r_spin = np.array([[cs, -ss, 0.0], [ss, cs, 0.0], [0.0, 0.0, 1.0]])
    z = np.array([0.0, 0.0, 1.0])
    c = float(np.dot(z, axis))
    if c > 1.0 - 1e-15:
        tilt = np.eye(3)
    elif c < -1.0 + 1e-15:
        tilt = np.diag([1.0, -1.0, -1.0])  # pi rotation about x
    else:
        k = np.cross(z, axis)
        k /= np.linalg.norm(k)
        kx = np.array([[0.0, -k[2], k[1]], [k[2], 0.0, -k[0]], [-k[1], k[0], 0.0]])
        s = math.sqrt(max(0.0, 1.0 - c * c))
        tilt = np.eye(3) + s * kx + (1.0 - c) * (kx @ kx)
    return tilt @ r_spin


def axis_rotate(tensor, axis, spin=0.0):
    """Re-express a z-axis response tensor for a spin axis along ``axis``.

    Returns R . entries . R^T with R a proper rotation mapping z to axis.
    The choice of R (the ``spin`` freedom) does not affect the result.
    """
    r = rotation_matrix_to_axis(axis, spin)
    return ResponseTensor(r @ tensor.entries @ r.T, tensor.omega, tensor.kind)


def fdt_weights(omega, Omega, temperature):
    """Thermal weights f, g of the modified fluctuation-dissipation relation.

    f = [coth(hbar*(w-Omega)/2kT) + coth(hbar*(w+Omega)/2kT)]/2 and g the
    half-difference. At T = 0 these are exact sign-function branches:
    f = sgn(w), g = 0 for |Omega| < |w|; f = 0, g = -sgn(Omega) otherwise.
    """
    w = np.asarray(omega, dtype=float)
    if temperature == 0.0:
        sm = np.sign(w - Omega)
        sp = np.sign(w + Omega)
    else:
        beta_half = HBAR / (2.0 * K_B * temperature)
        with np.errstate(divide="ignore"):
            sm = 1.0 / np.tanh(beta_half * (w - Omega))
            sp = 1.0 / np.tanh(beta_half * (w + Omega))
    return 0.5 * (sm + sp), 0.5 * (sm - sp)


def noneq_fdt_hadamard(alpha_fn, Omega, omega, temperature,
                       im_alpha_slope=None):
    """Hadamard tensor of a spinning sphere from the modified FDT relations.

    Builds the lab-frame polarizability tensor of the spinning sphere and
    converts it to the fluctuation spectrum through

        eta_xx = 2 f Im[alpha_xx] + 2 g Re[alpha_xy]
        eta_xy = -2i f Re[alpha_xy] - 2i g Im[alpha_xx]
        eta_zz = 2 coth(hbar w / 2kT) Im[alpha_zz]

    with f, g from :func:`fdt_weights`. This is the independent counterpart
    to transforming the rest-frame eta directly with :func:`spin_transform`;
    the two constructions agree identically (a consistency theorem of the
    rotating-frame treatment) and tests hold them to ~1e-12.

    At T > 0 the weights have poles at w = +/-Omega and w = 0 where the
    corresponding Im alpha vanishes; exactly-on-pole evaluations are
    regularized through the finite limit, using ``im_alpha_slope`` (the
    analytic limit of Im alpha(w)/w at w = 0) when supplied and a central
    difference of ``alpha_fn`` otherwise.

    Returns
    -------
    ResponseTensor
        Hadamard tensor, rotation axis along z.
    """
    w = float(omega)
    a_xx, a_xy, a_zz_alpha = spin_entries(alpha_fn, Omega, w)

    if temperature > 0.0:
        beta_half = HBAR / (2.0 * K_B * temperature)

        def lim_coth_im():
            # finite limit of coth(hbar*nu/2kT)*Im alpha(nu) as nu -> 0
            if im_alpha_slope is not None:
                slope = im_alpha_slope
            else:
                h = 1e-7 * (abs(Omega) + abs(w) + 1.0)
                slope = complex(alpha_fn(h) - alpha_fn(-h)).imag / (2.0 * h)
            return slope / beta_half

        # Near the branch points w = -/+Omega the diverging weights multiply
        # a vanishing combination of tensor entries; the literal f,g form
        # loses all precision there to cancellation. Inside a narrow strip
        # use the identical regrouped pairing coth(nu)*Im alpha(nu) instead
        # (exact limit at nu = 0).
        strip = 1e-3 * max(abs(w), abs(Omega), 1e-300)
        if abs(w - Omega) < strip or abs(w + Omega) < strip:
            def term(nu):
                if nu == 0.0:
                    return lim_coth_im()
                return complex(alpha_fn(nu)).imag / math.tanh(beta_half * nu)

            tm, tp = term(w - Omega), term(w + Omega)
            e_xx = tm + tp
            e_xy = 1j * (tp - tm)
        else:
            f, g = fdt_weights(w, Omega, temperature)
            e_xx = 2.0 * f * np.imag(a_xx) + 2.0 * g * np.real(a_xy)
            e_xy = -2.0j * f * np.real(a_xy) - 2.0j * g * np.imag(a_xx)
        if w == 0.0:
            e_zz = 2.0 * lim_coth_im()
        else:
            e_zz = 2.0 * np.imag(a_zz_alpha) / math.tanh(beta_half * w)
    else:
        f, g = fdt_weights(w, Omega, temperature)
        e_xx = 2.0 * f * np.imag(a_xx) + 2.0 * g * np.real(a_xy)
        e_xy = -2.0j * f * np.real(a_xy) - 2.0j * g * np.imag(a_xx)
        e_zz = 2.0 * np.sign(w) * np.imag(a_zz_alpha)

    return ResponseTensor(_assemble(complex(e_xx), complex(e_xy), complex(e_zz)),
                          w, TensorKind.HADAMARD)
