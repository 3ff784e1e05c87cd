"""Text, CSV and JSON renderings of trees, census tables and estimates."""

import json

import pandas as pd

from minmaxtree.data import const
from minmaxtree.data.types import (
    CensusTable,
    EstimateTable,
    MinMaxTree,
    OrbitRecord,
    VerifyReport,
)
from minmaxtree.perm import format_permutation

####################################################################################################
# TREE
####################################################################################################


def tree_records(t: MinMaxTree) -> list[dict]:
    """Return one record per position, in position order."""
    return [
        {
            "pos": i,
            "entry": t.entry(i),
            "kind": t.kinds[i - 1].value,
            "parent": t.parents[i - 1] or None,
            "left": t.lefts[i - 1] or None,
            "right": t.rights[i - 1] or None,
            "span": list(t.spans[i - 1]),
            "depth": t.depths[i - 1],
        }
        for i in t.positions()
    ]


def tree_to_json(t: MinMaxTree) -> str:
    """Write a tree as JSON with per-position node records."""
    data = {
        "permutation": list(t.permutation),
        "variant": t.variant.value,
        "root": t.root,
        "nodes": tree_records(t),
    }
    return json.dumps(data) + "\n"


####################################################################################################
# CENSUS
####################################################################################################


def census_frame(table: CensusTable) -> pd.DataFrame:
    """Return the census table as a frame with columns i, leaf, d0, d1, d2."""
    return pd.DataFrame(table.rows(), columns=const.csv_header)


def census_to_csv(table: CensusTable) -> str:
    """Write a census table as CSV with a header row."""
    return census_frame(table).to_csv(index=False, lineterminator="\n")


def census_to_json(table: CensusTable) -> str:
    """Write a census table as JSON."""
    return table.to_json() + "\n"


def census_to_text(table: CensusTable) -> str:
    """Write a census table as aligned text."""
    header = f"n={table.n} variant={table.variant.value} total={table.total}"
    body = census_frame(table).to_string(index=False)
    return f"{header}\n{body}\n"


def write_census(table: CensusTable, fmt: str) -> str:
    """Write a census table in the given format."""
    writers = {"text": census_to_text, "csv": census_to_csv, "json": census_to_json}
    return writers[fmt](table)


####################################################################################################
# ESTIMATE
####################################################################################################


def estimate_frame(table: EstimateTable) -> pd.DataFrame:
    """Return the estimate as a frame with columns i, q, se."""
    return pd.DataFrame(
        {
            "i": range(1, table.n + 1),
            "q": table.probabilities,
            "se": table.standard_errors,
        }
    )


def write_estimate(table: EstimateTable, fmt: str) -> str:
    """Write an estimate table in the given format."""
    if fmt == "json":
        return table.to_json() + "\n"
    frame = estimate_frame(table)
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")

    header = f"n={table.n} trials={table.trials} seed={table.seed}"
    rows = [
        f"{i} {q!r} {se!r}"
        for i, q, se in zip(frame["i"], table.probabilities, table.standard_errors)
    ]
    return "\n".join([header, "i q se", *rows]) + "\n"


####################################################################################################
# ORBIT AND VERIFY
####################################################################################################


def write_orbit(record: OrbitRecord, fmt: str) -> str:
    """Write an orbit as JSON, or as one member per line."""
    if fmt == "json":
        return record.to_json() + "\n"
    return "".join(f"{format_permutation(p)}\n" for p in record.members)


def write_report(report: VerifyReport, fmt: str) -> str:
    """Write a verify report as JSON, or one line per check result."""
    if fmt == "json":
        return report.to_json() + "\n"

    lines = []
    for result in report.results:
        status = "PASS" if result.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in result.parameters.items())
        line = f"{status} {result.name} {params}"
        if not result.passed:
            line += f": {result.detail}"
            if result.counterexample is not None:
                line += f" [{format_permutation(result.counterexample)}]"
        lines.append(line)

    failures = len(report.failures())
    lines.append(f"{len(report.results) - failures} passed, {failures} failed")
    return "\n".join(lines) + "\n"
