"""The fixture CLI suite: argument vectors whose outputs must be stable."""

from pathlib import Path

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def _c(name):
    return str(FIX / f"{name}.json")


CASES = [
    ["mu", "--curve", _c("121c2"), "--p", "11"],
    ["mu", "--curve", _c("9tors"), "--p", "3"],
    ["mu", "--curve", _c("x3mx"), "--p", "3", "--format", "tsv"],
    ["divpoly", "--curve", _c("9tors"), "--m", "3"],
    ["divpoly", "--curve", _c("9tors"), "--p", "3", "--n", "2", "--format", "tsv"],
    ["divpoly", "--curve", _c("x3p1"), "--m", "5"],
    ["spectrum", "--p", "3", "--n", "2", "--mu", "1/5", "--x-coords"],
    ["spectrum", "--p", "3", "--n", "2", "--mu", "1/5", "--x-coords", "--format", "tsv"],
    ["spectrum", "--p", "11", "--curve", _c("121c2")],
    ["spectrum", "--p", "3", "--n", "3", "--mu", "1/5", "--format", "tsv"],
    ["spectrum", "--p", "5", "--n", "2", "--mu", "inf"],
    ["ramification", "--p", "3", "--n", "2", "--mu", "1/5"],
    ["ramification", "--p", "11", "--curve", _c("121c2"), "--format", "tsv"],
    ["polygon", "--curve", _c("121c2"), "--p", "11"],
    ["polygon", "--curve", _c("9tors"), "--p", "3", "--n", "2", "--monic", "--format", "tsv"],
    ["oracle-compare", "--curve", _c("9tors"), "--p", "3", "--n", "2"],
    ["oracle-compare", "--curve", _c("x3p1"), "--p", "5", "--format", "tsv"],
    ["sporadic-check", "--N", "35"],
    ["sporadic-check", "--p", "13", "--mu", "1/2", "--reduction-factor", "4", "--aut-order", "2"],
    ["sporadic-check", "--p", "2", "--n", "3", "--mu", "inf", "--j-class", "j1728", "--format", "tsv"],
    ["sporadic-check", "--p", "11", "--curve", _c("121c2")],
    ["mintors-degree", "--N", "35"],
    ["mintors-degree", "--factorization", "2^2", "--format", "tsv"],
]
