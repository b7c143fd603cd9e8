"""Scenario families: gate toy model, XX ring, Jaynes-Cummings pair,
amplitude damping pair and photon dephasing."""
from . import ad, gate, jc, photon, xx

__all__ = ["ad", "gate", "jc", "photon", "xx"]
