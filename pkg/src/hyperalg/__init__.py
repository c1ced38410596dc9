"""hyperalg: exact hyperfield arithmetic, functions on the spectra of the
Krasner and sign hyperfields, and zeta counting-function numerics."""

__version__ = "0.1.0"
