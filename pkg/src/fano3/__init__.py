"""Exact verification of intersection numbers, elimination identities and point counts
for conic-bundle and del Pezzo fibration models of Fano threefolds."""

__version__ = "0.1.0"
