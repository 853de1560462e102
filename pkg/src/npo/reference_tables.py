"""Published reference tables and the machinery to recompute them.

Each registry entry stores the published parameters and value verbatim plus
the conventions needed to reproduce it (basis size actually used, fixed or
minimized A, relabeled parameters).  Non-obvious conventions, all verified
against the published digits during development:

* Bracketed basis labels are inconsistent across the source tables.  The
  order-1 comparison rows ([2]) reproduce with two basis functions; the
  order-2 rows ([2]) only with three (the closed-form state is a degree-2
  polynomial times the Gaussian, so two functions cannot contain it).
* The convergence table (table 3) is A-minimized per cell, not A = 0; its
  D = 1 cells are themselves inconsistent (two of them used one basis
  function, the others two).  Every cell's actual size is recorded.
* In the coupling-scan table (table 4) the lam = 0.5 block is mislabeled
  g = 1; the printed values (and the bounding brackets quoted alongside
  them) reproduce only with g = 0.1.  Rows are recomputed at g = 0.1 and
  carry a note.
* In table 2 the lam = -26 and lam = -12 rows are labeled g = 0.1 but solve
  the order-2 constraint only with g = 1; they are recomputed at g = 1 and
  carry a note.

Several published values also carry numerical noise above the comparison
tolerance (their bound sequences are not converged to all printed digits);
those rows are marked ``published_noise`` with the measured deviation so the
table runner can report them distinctly instead of silently passing or
failing.  The evidence is independent: the recomputed entries agree with
adaptive quadrature at 1e-16, the recomputed bounds fall below the printed
ones (valid bounds decrease with basis size), and the shooting solver brackets
them from below.
"""

from __future__ import annotations

from dataclasses import dataclass

#: |computed - published| allowance of one unit in the last printed place.
ONE_ULP = "one_ulp"


def ulp_of(printed: str) -> float:
    """One unit in the last place of a printed decimal string."""
    s = printed.strip().lstrip("-")
    if "." not in s:
        return 1.0
    return 10.0 ** -(len(s) - s.index(".") - 1)


@dataclass(frozen=True)
class ExactComparisonRow:
    """One row of the order-n exact-vs-variational comparison tables."""

    order: int
    g: float
    gamma: float
    lam: float
    energy: str            # published closed-form energy
    level: int             # eigenvalue index within the channel
    basis_size: int        # size actually used for the published bound
    note: str = ""


@dataclass(frozen=True)
class ConvergenceCell:
    """One cell of the bound-vs-basis-size convergence table."""

    g: float
    level: int
    printed_D: int
    basis_size: int
    value: str
    note: str = ""


@dataclass(frozen=True)
class CouplingScanRow:
    """One row of the (lam, g, l) scan at N = 3, basis size 18, A = 0."""

    lam: float
    g: float
    l: int
    value: str
    bracket_lo: str = ""   # two-sided comparison bracket when available
    bracket_hi: str = ""
    note: str = ""
    published_noise: float = 0.0  # measured deviation of the published value


@dataclass(frozen=True)
class PerturbationCell:
    """One first-order coefficient at N = 3, l = 0."""

    g: float
    n: int
    value: str
    note: str = ""
    published_noise: float = 0.0


TABLE1 = [
    ExactComparisonRow(1, 0.1, 0.0, -0.46, "2.400000000000", 0, 2),
    ExactComparisonRow(1, 0.1, 2.0, -0.54, "5.600000000000", 0, 2),
    ExactComparisonRow(1, 1.0, 0.0, -10.0, "-3.000000000000", 0, 2),
    ExactComparisonRow(1, 1.0, 2.0, -18.0, "-7.000000000000", 0, 2),
    ExactComparisonRow(1, 10.0, 0.0, -640.0, "-57.000000000000", 0, 2),
    ExactComparisonRow(1, 10.0, 2.0, -1440.0, "-133.000000000000", 0, 2),
]

_G1_NOTE = "labeled g=0.1 in print; satisfies the order-2 constraint only at g=1"

TABLE2 = [
    ExactComparisonRow(2, 1.0, 0.0, -26.0, "-15.000000000000", 0, 3, note=_G1_NOTE),
    ExactComparisonRow(2, 1.0, 0.0, -12.0, "-1.000000000000", 1, 3, note=_G1_NOTE),
    ExactComparisonRow(
        2, 0.1, 1.0, -0.56174575578973345189, "7.382542442102665", 1, 3
    ),
    ExactComparisonRow(
        2, 0.1, 1.0, -1.0182542442102665481, "2.817457557897335", 0, 3
    ),
]

_D1_NOTE = "printed D=1; reproduces only with two basis functions"

TABLE3 = [
    ConvergenceCell(1.0, 0, 1, 1, "3.51158094"),
    ConvergenceCell(1.0, 0, 5, 5, "3.50740682"),
    ConvergenceCell(1.0, 0, 10, 10, "3.50738865"),
    ConvergenceCell(1.0, 0, 15, 15, "3.50738836"),
    ConvergenceCell(1.0, 0, 16, 16, "3.50738835"),
    ConvergenceCell(1.0, 1, 1, 2, "7.65220193", note=_D1_NOTE),
    ConvergenceCell(1.0, 1, 5, 5, "7.64828294"),
    ConvergenceCell(1.0, 1, 10, 10, "7.64820250"),
    ConvergenceCell(1.0, 1, 15, 15, "7.64820129"),
    ConvergenceCell(1.0, 1, 19, 19, "7.64820124"),
    ConvergenceCell(10.0, 0, 1, 2, "3.08809337", note=_D1_NOTE),
    ConvergenceCell(10.0, 0, 5, 5, "3.08809139"),
    ConvergenceCell(10.0, 0, 10, 10, "3.08809096"),
    ConvergenceCell(10.0, 0, 15, 15, "3.08809088"),
    ConvergenceCell(10.0, 0, 19, 19, "3.08809086"),
    ConvergenceCell(10.0, 1, 1, 2, "7.09037623", note=_D1_NOTE),
    ConvergenceCell(10.0, 1, 5, 5, "7.09037144"),
    ConvergenceCell(10.0, 1, 10, 10, "7.09037060"),
    ConvergenceCell(10.0, 1, 15, 15, "7.09037046"),
    ConvergenceCell(10.0, 1, 19, 19, "7.09037043"),
    ConvergenceCell(100.0, 0, 1, 1, "3.009831772"),
    ConvergenceCell(100.0, 0, 5, 5, "3.009831771"),
    ConvergenceCell(100.0, 0, 10, 10, "3.009831771"),
    ConvergenceCell(100.0, 0, 15, 15, "3.009831771"),
    ConvergenceCell(100.0, 1, 1, 2, "7.00984496", note=_D1_NOTE),
    ConvergenceCell(100.0, 1, 5, 5, "7.00984495"),
    ConvergenceCell(100.0, 1, 10, 10, "7.00984495"),
    ConvergenceCell(100.0, 1, 15, 15, "7.00984495"),
]

_RELABEL_NOTE = "printed under g=1; values and brackets reproduce only at g=0.1"

TABLE4 = [
    CouplingScanRow(0.1, 0.1, 1, "5.186373002931507",
                    "5.1863730029314", "5.1863730029316"),
    CouplingScanRow(0.1, 0.1, 2, "7.243961840421887",
                    "7.2439618404138", "7.2439618404260"),
    CouplingScanRow(0.1, 0.1, 3, "9.294359110874627",
                    "9.29435911086337", "9.29435911088159"),
    CouplingScanRow(0.1, 0.5, 1, "5.100857624300696",
                    "5.100842", "5.100865", published_noise=5.5e-12),
    CouplingScanRow(0.1, 0.5, 2, "7.11898087156427", "7.11890", "7.118901"),
    CouplingScanRow(0.1, 0.5, 3, "9.131812401691521", "9.131799", "9.131838"),
    CouplingScanRow(0.1, 1.0, 1, "5.065569521783354",
                    "5.06428", "5.06609", published_noise=6.2e-11),
    CouplingScanRow(0.1, 1.0, 2, "7.073726361909647",
                    "7.0730", "7.0744", published_noise=3.0e-11),
    CouplingScanRow(0.1, 1.0, 3, "9.078911720303639",
                    "9.0787", "9.07892", published_noise=1.3e-11),
    CouplingScanRow(0.5, 0.1, 1, "5.893595152339402",
                    "5.89359515233919", "5.89359515233945", note=_RELABEL_NOTE),
    CouplingScanRow(0.5, 0.1, 2, "8.1778716934677",
                    "8.177871693435", "8.177871693485", note=_RELABEL_NOTE),
    CouplingScanRow(0.5, 0.1, 3, "10.429204118147453",
                    "10.4292041181366", "10.4292041181548", note=_RELABEL_NOTE),
    CouplingScanRow(1.0, 0.1, 1, "6.704238892478644",
                    "6.7042388924777", "6.7042388924788"),
    CouplingScanRow(1.0, 0.1, 2, "9.261914780826569",
                    "9.2619147807", "9.2619147809"),
    CouplingScanRow(1.0, 0.1, 3, "11.760620962669972",
                    "11.7606209626312", "11.7606209626917"),
    CouplingScanRow(1.0, 1.0, 1, "5.65139331725017",
                    "5.6503", "5.6521", published_noise=8.4e-9),
    CouplingScanRow(1.0, 1.0, 2, "7.73482804292358",
                    "7.734", "7.736", published_noise=3.9e-9),
    CouplingScanRow(1.0, 1.0, 3, "9.787669778509466",
                    "9.7875", "9.7881", published_noise=1.3e-10),
    CouplingScanRow(100.0, 100.0, 1, "5.993438873366758",
                    "", "6.389", published_noise=2.5e-8),
    CouplingScanRow(100.0, 100.0, 2, "7.996024673021835",
                    "7.9947", "8.037800", published_noise=3.7e-10),
    CouplingScanRow(100.0, 100.0, 3, "9.997153638602487",
                    "9.9969", "10.0113", published_noise=5.4e-11),
]

TABLE5 = [
    PerturbationCell(0.5, 0, "0.741907668608869"),
    PerturbationCell(0.5, 1, "1.058912626973532", published_noise=1.08e-12,
                     note="published digits 13-16 disagree with quadrature"),
    PerturbationCell(0.5, 2, "1.216304645477702"),
    PerturbationCell(1.0, 0, "0.515744312282624"),
    PerturbationCell(1.0, 1, "0.648934634510945"),
    PerturbationCell(1.0, 2, "0.712059158182293"),
    PerturbationCell(2.0, 0, "0.327839771209399"),
    PerturbationCell(2.0, 1, "0.374239389891732"),
    PerturbationCell(2.0, 2, "0.396830711146285"),
    PerturbationCell(5.0, 0, "0.160824698125120"),
    PerturbationCell(5.0, 1, "0.169855585054398"),
    PerturbationCell(5.0, 2, "0.174677060833675"),
    PerturbationCell(10.0, 0, "0.088111301584084"),
    PerturbationCell(10.0, 1, "0.090376621370169"),
    PerturbationCell(10.0, 2, "0.091681154216976"),
    PerturbationCell(20.0, 0, "0.046566260901426"),
    PerturbationCell(20.0, 1, "0.047083627877117"),
    PerturbationCell(20.0, 2, "0.047401822090664"),
    PerturbationCell(100.0, 0, "0.009831778572526"),
    PerturbationCell(100.0, 1, "0.009844958882145"),
    PerturbationCell(100.0, 2, "0.009853945311642"),
    PerturbationCell(500.0, 0, "0.001992603359200"),
    PerturbationCell(500.0, 1, "0.001992880765846"),
    PerturbationCell(500.0, 2, "0.001993079888610"),
]

#: Basis size used throughout the coupling-scan table.
TABLE4_BASIS_SIZE = 18

#: Comparison tolerances per table (see the acceptance suite).
TABLE_TOLERANCES = {
    1: {"exact_rel": 1e-12, "bound_abs": 1e-9},
    2: {"exact_rel": 1e-12, "bound_abs": 1e-9, "optimal_A_abs": 1e-3},
    3: {"ulp": 1.0},
    4: {"rel": 1e-12},
    5: {"rel": 1e-12},
}
