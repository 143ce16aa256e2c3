"""Published benchmark values for the four built-in problems.

Each entry holds the reported convergence-control value, the leading
coefficients of the reported order-2 solution, and the reported
(x, exact, ADM, OHAM) table at x = 0.0, 0.1, ..., 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceTable:
    example_id: int
    c0: float
    phi2_coeffs: tuple[float, ...]
    rows: tuple[tuple[float, float, float, float], ...]   # x, exact, adm, oham


REFERENCE = {
    1: ReferenceTable(1, -0.505595, (0.0, 7.7e-16, 0.0, 1.0), (
        (0.0, 0.000, 0.0000000000, 0.000),
        (0.1, 0.001, -0.062559671, 0.001),
        (0.2, 0.008, -0.115267240, 0.008),
        (0.3, 0.027, -0.148270607, 0.027),
        (0.4, 0.064, -0.151717670, 0.064),
        (0.5, 0.125, -0.115756328, 0.125),
        (0.6, 0.216, -0.030534480, 0.216),
        (0.7, 0.343, 0.1137999760, 0.343),
        (0.8, 0.512, 0.3270991400, 0.512),
        (0.9, 0.729, 0.6192151140, 0.729),
        (1.0, 1.000, 1.0000000000, 1.000),
    )),
    2: ReferenceTable(2, -0.819014, (
        1.0, -0.4973, 0.3737, -0.3060, 0.2235, -0.1258, 0.05148, -0.0153, 0.0033,
        -0.00055, 0.0000646), (
        (0.0, 1.000000000, 1.000000000, 1.000000000),
        (0.1, 0.953462589, 0.954516555, 0.953715758),
        (0.2, 0.912870929, 0.914909713, 0.913348055),
        (0.3, 0.877058019, 0.879819116, 0.877702187),
        (0.4, 0.845154255, 0.848286083, 0.845886767),
        (0.5, 0.816496581, 0.819638873, 0.817233417),
        (0.6, 0.790569415, 0.793406404, 0.791235825),
        (0.7, 0.766964989, 0.769254375, 0.767504100),
        (0.8, 0.745355992, 0.746938889, 0.745731089),
        (0.9, 0.725476250, 0.726273545, 0.725667948),
        (1.0, 0.707106781, 0.707106781, 0.707106781),
    )),
    3: ReferenceTable(3, -0.933697, (
        1.0, -0.495211, 0.362361, -0.280911, 0.195035, -0.107115, 0.043453, -0.01294,
        0.002854, -0.000464, 0.000054), (
        (0.0, 1.000000000, 1.000000000, 1.000000000),
        (0.1, 0.953462589, 0.954139200, 0.953840089),
        (0.2, 0.912870929, 0.914044009, 0.913485384),
        (0.3, 0.877058019, 0.878552757, 0.877813154),
        (0.4, 0.845154255, 0.846797874, 0.845969674),
        (0.5, 0.816496581, 0.818128147, 0.817301384),
        (0.6, 0.790569415, 0.792049712, 0.791302438),
        (0.7, 0.766964989, 0.768181846, 0.767575192),
        (0.8, 0.745355992, 0.746224331, 0.745800843),
        (0.9, 0.725476250, 0.725933776, 0.725717917),
        (1.0, 0.707106781, 0.707106781, 0.707106781),
    )),
    4: ReferenceTable(4, -0.612671, (
        1.0, -1.00399, 0.995127, -0.90086, 0.655261, -0.338986, 0.115228, -0.0246916,
        0.00308645, -0.00017147), (
        (0.0, 1.000000000, 1.000000000, 1.000000000),
        (0.1, 0.909090909, 0.914550054, 0.908713383),
        (0.2, 0.833333333, 0.844849352, 0.832746652),
        (0.3, 0.769230769, 0.785573674, 0.768603045),
        (0.4, 0.714285714, 0.733317575, 0.713705107),
        (0.5, 0.666666667, 0.686029523, 0.666157571),
        (0.6, 0.625000000, 0.642573190, 0.624561470),
        (0.7, 0.588235294, 0.602393994, 0.587870965),
        (0.8, 0.555555556, 0.565272431, 0.555285414),
        (0.9, 0.526315789, 0.531148042, 0.526170109),
        (1.0, 0.500000000, 0.500000000, 0.500000000),
    )),
}
