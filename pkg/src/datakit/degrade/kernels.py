"""Blur-kernel construction and sampling.

The kernel family covers isotropic/anisotropic Gaussians, generalized
Gaussians, plateau profiles, and circular sinc low-pass kernels. Weights
always sum to 1; only sinc kernels carry small negative lobes.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .steps import BlurStep


def _mesh(size: int) -> np.ndarray:
    ax = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    xx, yy = np.meshgrid(ax, ax)
    return np.stack([xx, yy], axis=-1)


def _inverse_sigma(sigma_x: float, sigma_y: float, theta: float) -> np.ndarray:
    d = np.array([[sigma_x ** 2, 0.0], [0.0, sigma_y ** 2]])
    u = np.array([[math.cos(theta), -math.sin(theta)],
                  [math.sin(theta), math.cos(theta)]])
    return np.linalg.inv(u @ d @ u.T)

def _quadratic_form(size: int, sigma_x: float, sigma_y: float,
                    theta: float) -> np.ndarray:
    grid = _mesh(size)
    inv = _inverse_sigma(sigma_x, sigma_y, theta)
    return np.einsum("hwi,ij,hwj->hw", grid, inv, grid)


def sinc_kernel(omega: float, size: int) -> np.ndarray:
    """Circular low-pass kernel with cutoff ``omega``; sums to 1."""
    ax = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    xx, yy = np.meshgrid(ax, ax)
    r = np.hypot(xx, yy)
    kernel = np.empty((size, size), dtype=np.float64)
    center = (size - 1) // 2
    nonzero = r > 0
    kernel[nonzero] = omega * special.j1(omega * r[nonzero]) / (2 * np.pi * r[nonzero])
    kernel[center, center] = omega ** 2 / (4 * np.pi)
    return kernel / kernel.sum()


def build_kernel(step: BlurStep) -> np.ndarray:
    """Materialize the (size, size) weight matrix for a blur step."""
    size = step.size
    if step.kind == "identity":
        kernel = np.zeros((size, size), dtype=np.float64)
        kernel[(size - 1) // 2, (size - 1) // 2] = 1.0
        return kernel
    if step.kind == "sinc":
        return sinc_kernel(step.omega, size)

    q = _quadratic_form(size, step.sigma_x, step.sigma_y, step.rotation)
    if step.kind in ("iso", "aniso"):
        kernel = np.exp(-0.5 * q)
    elif step.kind in ("generalized_iso", "generalized_aniso"):
        kernel = np.exp(-0.5 * np.power(q, step.beta))
    elif step.kind in ("plateau_iso", "plateau_aniso"):
        kernel = np.reciprocal(np.power(q, step.beta) + 1.0)
    else:
        raise ValueError(f"unknown kernel kind: {step.kind}")
    return kernel / kernel.sum()


def sample_blur_step(stage: int, cfg, rng: np.random.Generator) -> BlurStep:
    """Draw one blur step from a stage's kernel distribution."""
    size = int(rng.choice(np.asarray(cfg.kernel_sizes)))
    if rng.random() < cfg.sinc_prob:
        lo = np.pi / 3 if size < 13 else np.pi / 5
        return BlurStep(stage=stage, kind="sinc", size=size,
                        omega=float(rng.uniform(lo, np.pi)))

    kind = str(rng.choice(np.asarray(cfg.kernel_kinds),
                          p=np.asarray(cfg.kernel_probs)))
    sigma_x = float(rng.uniform(*cfg.blur_sigma))
    if kind.endswith("aniso"):
        sigma_y = float(rng.uniform(*cfg.blur_sigma))
        rotation = float(rng.uniform(-math.pi, math.pi))
    else:
        sigma_y, rotation = sigma_x, 0.0

    beta = 0.0
    if kind.startswith("generalized"):
        beta_range = cfg.betag_range
    elif kind.startswith("plateau"):
        beta_range = cfg.betap_range
    else:
        beta_range = None
    if beta_range is not None:
        # half the draws shape the profile below 1 (spiky), half above (flat)
        if rng.random() < 0.5:
            beta = float(rng.uniform(beta_range[0], 1.0))
        else:
            beta = float(rng.uniform(1.0, beta_range[1]))

    return BlurStep(stage=stage, kind=kind, size=size, sigma_x=sigma_x,
                    sigma_y=sigma_y, rotation=rotation, beta=beta)
