"""Physical model of a dual-polarized planar reflecting surface.

Steering vectors, the mapping between configuration vectors and matrices, the
power-domain array factor, the single-element gain model, the total radiation
pattern and the received power. Angles are radians throughout.
"""
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.domain.entities.array import ArrayPair, UnimodularArray
from src.domain.entities.ris import (
    Direction,
    DualPolConfig,
    ElementGainParams,
    LinkBudget,
    Polarization,
    RisGeometry,
)
from src.domain.entities.sequence import SequencePair, UnimodularSequence
from src.domain.exceptions import InvalidInputError


def _wavenumber(geom: RisGeometry) -> float:
    return 2 * math.pi / geom.wavelength


def relative_phase_shifts(geom: RisGeometry, d: Direction) -> tuple[float, float]:
    """
    Inter-element phase progressions (psi_y, psi_z) toward direction d.

    psi_y = k * delta_y * sin(azimuth) * cos(elevation)
    psi_z = k * delta_z * sin(elevation)
    """
    k = _wavenumber(geom)
    psi_y = k * geom.delta_y * math.sin(d.azimuth) * math.cos(d.elevation)
    psi_z = k * geom.delta_z * math.sin(d.elevation)
    return psi_y, psi_z


def steering_vector(
    geom: RisGeometry, d: Direction, pol: Polarization | str = Polarization.H
) -> NDArray[np.complex128]:
    """
    Array response of one polarization, length n_y * n_z / 2.

    The H response is kron(a_z, a_y) with a_y[n] = e^{-j n psi_y} and
    a_z[m] = e^{-j 2 m psi_z}; V elements sit one row higher, which multiplies
    the H response by e^{-j psi_z}.
    """
    psi_y, psi_z = relative_phase_shifts(geom, d)
    a_y = np.exp(-1j * psi_y * np.arange(geom.n_y))
    a_z = np.exp(-2j * psi_z * np.arange(geom.n_z_half))
    a_h = np.kron(a_z, a_y)
    if Polarization(pol) is Polarization.V:
        return np.exp(-1j * psi_z) * a_h
    return a_h


def fold_config(
    phi_h: UnimodularSequence, phi_v: UnimodularSequence, geom: RisGeometry
) -> DualPolConfig:
    """
    Reshape configuration vectors into N_y x N_z/2 matrices, column by column.

    Column k holds entries k*N_y .. (k+1)*N_y - 1 of the vector.
    """
    expected = geom.elements_per_polarization
    for label, phi in (("H", phi_h), ("V", phi_v)):
        if len(phi) != expected:
            raise InvalidInputError(
                f"{label} configuration has {len(phi)} entries, geometry needs {expected}"
            )
    shape = geom.config_dims
    return DualPolConfig(
        UnimodularArray(phi_h.phases.reshape(shape, order="F")),
        UnimodularArray(phi_v.phases.reshape(shape, order="F")),
    )


def unfold_config(cfg: DualPolConfig) -> SequencePair:
    """Inverse of fold_config: stack the matrix columns into vectors."""
    return SequencePair(
        UnimodularSequence(cfg.upsilon_h.phases.ravel(order="F")),
        UnimodularSequence(cfg.upsilon_v.phases.ravel(order="F")),
    )


def configure_from_array_pair(pair: ArrayPair, geom: RisGeometry) -> DualPolConfig:
    """Use (U, W) as (H, V) configuration matrices after checking they fit the geometry."""
    cfg = DualPolConfig.from_array_pair(pair)
    cfg.check_geometry(geom)
    return cfg


def flat_level(geom: RisGeometry) -> float:
    """Array factor attained everywhere by a complementary configuration: N_y * N_z."""
    return float(geom.n_y * geom.n_z)


def per_polarization_array_factor(
    cfg: DualPolConfig,
    geom: RisGeometry,
    d: Direction,
    aoa: Direction,
    pol: Polarization | str,
) -> float:
    """|phi_p^T (a_p(d) * a_p(aoa))|^2 for one polarization."""
    cfg.check_geometry(geom)
    phi = unfold_config(cfg)
    vector = phi.u if Polarization(pol) is Polarization.H else phi.w
    response = steering_vector(geom, d, pol) * steering_vector(geom, aoa, pol)
    return float(abs(np.sum(vector.values * response)) ** 2)


def power_domain_array_factor(
    cfg: DualPolConfig, geom: RisGeometry, d: Direction, aoa: Direction
) -> float:
    """
    Total power-domain array factor A(d) in linear units.

    Sum over both polarizations of the squared configuration-weighted response;
    lies in [0, (n_y * n_z)^2].
    """
    return sum(per_polarization_array_factor(cfg, geom, d, aoa, pol) for pol in Polarization)


def power_domain_array_factor_double_sum(
    cfg: DualPolConfig, geom: RisGeometry, d: Direction, aoa: Direction
) -> float:
    """
    Same quantity as power_domain_array_factor via the explicit double sum
    over (n_y, n_z) at the effective phases psi_hat = psi(d) + psi(aoa).
    """
    cfg.check_geometry(geom)
    psi_y, psi_z = relative_phase_shifts(geom, d)
    psi_y_aoa, psi_z_aoa = relative_phase_shifts(geom, aoa)
    psi_y_hat, psi_z_hat = psi_y + psi_y_aoa, psi_z + psi_z_aoa

    total = 0.0
    for pol in Polarization:
        upsilon = cfg.matrix(pol).values
        acc = 0j
        for n_z in range(geom.n_z_half):
            for n_y in range(geom.n_y):
                acc += upsilon[n_y, n_z] * np.exp(-1j * (n_y * psi_y_hat + 2 * n_z * psi_z_hat))
        total += abs(acc) ** 2
    return total


def polarization_responses(
    cfg: DualPolConfig,
    geom: RisGeometry,
    azimuths: ArrayLike,
    elevation: float,
    aoa: Direction,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Per-polarization array factors along one elevation row of a grid.

    Reductions use fixed-shape elementwise sums so a point's value depends only
    on the row it belongs to.
    """
    cfg.check_geometry(geom)
    az = np.asarray(azimuths, dtype=np.float64)
    k = _wavenumber(geom)
    psi_y_aoa, psi_z_aoa = relative_phase_shifts(geom, aoa)
    psi_y_hat = k * geom.delta_y * np.sin(az) * math.cos(elevation) + psi_y_aoa
    psi_z_hat = k * geom.delta_z * math.sin(elevation) + psi_z_aoa

    e_y = np.exp(-1j * psi_y_hat[:, None] * np.arange(geom.n_y)[None, :])
    e_z = np.exp(-2j * psi_z_hat * np.arange(geom.n_z_half))

    factors = []
    for pol in Polarization:
        upsilon = cfg.matrix(pol).values
        columns = np.sum(e_y[:, :, None] * upsilon[None, :, :], axis=1)
        response = np.sum(columns * e_z[None, :], axis=1)
        factors.append(np.abs(response) ** 2)
    return factors[0], factors[1]


def element_gain_db(
    azimuth: ArrayLike, elevation: ArrayLike, p: ElementGainParams
) -> NDArray[np.float64]:
    """Element gain in dBi; vectorized over angle arrays."""
    az = np.asarray(azimuth, dtype=np.float64)
    el = np.asarray(elevation, dtype=np.float64)
    horizontal = np.minimum(12.0 * ((az - p.phi0) / p.delta_phi) ** 2, p.floor_db)
    vertical = np.minimum(12.0 * ((el - p.theta0) / p.delta_theta) ** 2, p.floor_db)
    return p.peak_gain_dbi - np.minimum(horizontal + vertical, p.floor_db)


def element_gain(d: Direction, p: ElementGainParams) -> float:
    """Element gain toward d in dBi, within [peak - floor, peak]."""
    return float(element_gain_db(d.azimuth, d.elevation, p))


def db(value: float) -> float:
    """10*log10(value); -inf at a null."""
    if value <= 0.0:
        return -math.inf
    return 10.0 * math.log10(value)


def total_radiation_pattern(
    cfg: DualPolConfig,
    geom: RisGeometry,
    d: Direction,
    aoa: Direction,
    p: ElementGainParams,
) -> float:
    """A(d) * G(aoa) * G(d) in dB."""
    return (
        db(power_domain_array_factor(cfg, geom, d, aoa))
        + element_gain(aoa, p)
        + element_gain(d, p)
    )


def received_power(
    link: LinkBudget,
    cfg: DualPolConfig,
    geom: RisGeometry,
    d: Direction,
    aoa: Direction,
    p: ElementGainParams,
) -> float:
    """
    Noise-free received power in watts after combining both polarizations.

    P = M * P_T * beta1 * beta2 * G_B0 * G(aoa) * G(d) * A(d), gains linear.
    """
    if not isinstance(link, LinkBudget):
        raise InvalidInputError("received_power expects a LinkBudget")
    gain_aoa = 10.0 ** (element_gain(aoa, p) / 10.0)
    gain_d = 10.0 ** (element_gain(d, p) / 10.0)
    return link.scale * gain_aoa * gain_d * power_domain_array_factor(cfg, geom, d, aoa)
