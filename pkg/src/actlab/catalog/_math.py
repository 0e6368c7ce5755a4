"""Shared overflow-safe numerics for the activation kernels."""

import numpy as np
from scipy.special import erf, expit


def sigmoid(x):
    return expit(x)


def sigmoid_prime(x):
    s = expit(x)
    return s * (1.0 - s)


def softplus(x):
    return np.logaddexp(0.0, x)


def sech(x):
    # 2e^{-|x|} / (1 + e^{-2|x|}) avoids cosh overflow for large |x|
    a = np.exp(-np.abs(x))
    return 2.0 * a / (1.0 + a * a)


def sech2(x):
    t = np.tanh(x)
    return 1.0 - t * t


def gauss_cdf(x):
    return 0.5 * (1.0 + erf(x / np.sqrt(2.0)))


def gauss_pdf(x):
    return np.exp(-0.5 * x * x) / np.sqrt(2.0 * np.pi)


__all__ = ["erf", "expit", "sigmoid", "sigmoid_prime", "softplus", "sech",
           "sech2", "gauss_cdf", "gauss_pdf"]
