"""Report construction for the command-line front end.

A report is a plain dict with stable field names (schemaVersion 1): input
echo, classification, cut-set census, closed-form invariants, and an
optional verification block with one pass/fail/skipped verdict per check.
The same dict drives both renderings; the text view contains exactly the
numbers of the structured view.  JSON serialization is canonical (sorted
keys, fixed separators) so that parse + re-render is byte-identical.
"""

from __future__ import annotations

import json
import time

from .graphs import Graph, classify, cut_set_census, enumerate_connected_graphs
from .homology import hochster_betti
from .ideals import (
    BasisValidationError,
    depth_formula,
    gbei_generators,
    initial_ideal,
    is_unmixed,
    krull_dimension,
    minimal_primes,
    regularity_formula,
)
from .poly import VarGrid, buchberger, ideal_equal, intersect, monomial_ideal_equal

SCHEMA_VERSION = 1

PRIME_CHECK_DEFAULT_LIMIT = 8


class _Stopwatch:
    def __init__(self):
        self.laps: dict[str, int] = {}

    def time(self, stage: str):
        return _Lap(self, stage)


class _Lap:
    def __init__(self, watch: _Stopwatch, stage: str):
        self.watch = watch
        self.stage = stage

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        ms = int((time.perf_counter() - self.start) * 1000)
        self.watch.laps[self.stage] = self.watch.laps.get(self.stage, 0) + ms
        return False


def _vset(s) -> list[int]:
    return sorted(s)


def _input_block(g: Graph, rows: int | None) -> dict:
    block = {"vertices": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if rows is not None:
        block["rows"] = rows
    return block


def _classification_block(g: Graph) -> dict:
    c = classify(g)
    return {
        "chordal": c.chordal,
        "blockGraph": c.block_graph,
        "generalizedBlockGraph": c.generalized_block_graph,
        "cliqueNumber": c.clique_number,
    }


def _census_block(g: Graph) -> dict:
    census = cut_set_census(g)
    return {
        "cliqueNumber": census.clique_number,
        "a": {str(i): census.a(i) for i in range(1, census.clique_number)},
        "minimalCutSets": {
            str(i): [_vset(s) for s in sets]
            for i, sets in sorted(census.minimal_cut_sets.items())
        },
        "cutPointSets": [
            {"set": _vset(t), "components": census.component_counts[t]}
            for t in census.cut_point_sets
        ],
    }


def _formula_block(g: Graph, rows: int) -> dict:
    dim, _ = krull_dimension(g, rows)
    block = {
        "dimension": dim,
        "unmixed": is_unmixed(g, rows),
    }
    if all(classify(part).generalized_block_graph for part in _parts(g)):
        d = depth_formula(g, rows)
        r = regularity_formula(g, rows)
        block["status"] = "ok"
        block["depth"] = {"value": d.value, "kind": d.kind, "provenance": d.provenance}
        block["regularity"] = {"value": r.value, "kind": r.kind, "provenance": r.provenance}
    else:
        block["status"] = "skipped"
        block["reason"] = "not a generalized block graph: closed forms do not apply"
    return block


def _parts(g: Graph):
    from .graphs import connected_components, induced_subgraph

    return [induced_subgraph(g, comp)[0] for comp in connected_components(g)]


def _check(name: str, status: str, detail: str) -> dict:
    return {"name": name, "status": status, "detail": detail}


def _verification_block(g: Graph, rows: int, max_vars: int, with_primes: bool, watch: _Stopwatch) -> dict:
    checks = []
    nvars = rows * g.n
    formulas_apply = all(classify(part).generalized_block_graph for part in _parts(g))

    oracle_table = None
    if nvars <= max_vars:
        with watch.time("oracle"):
            oracle_table = hochster_betti(initial_ideal(g, rows), VarGrid(rows, g.n))

    if not formulas_apply:
        why = "skipped: formulas undefined off generalized block graphs"
        checks.append(_check("depth-vs-oracle", "skipped", why))
        checks.append(_check("regularity-vs-oracle", "skipped", why))
    elif oracle_table is None:
        why = f"skipped: {nvars} variables exceeds --max-vars {max_vars}"
        checks.append(_check("depth-vs-oracle", "skipped", why))
        checks.append(_check("regularity-vs-oracle", "skipped", why))
    else:
        d = depth_formula(g, rows)
        got = oracle_table.depth()
        status = "pass" if got == d.value else "fail"
        checks.append(_check("depth-vs-oracle", status, f"oracle {got}, formula {d.value}"))
        r = regularity_formula(g, rows)
        got = oracle_table.regularity()
        if r.kind == "exact":
            status = "pass" if got == r.value else "fail"
            detail = f"oracle {got}, formula {r.value} (exact)"
        else:
            status = "pass" if got <= r.value else "fail"
            detail = f"oracle {got} <= bound {r.value}"
        checks.append(_check("regularity-vs-oracle", status, detail))

    with watch.time("groebner"):
        try:
            closed = initial_ideal(g, rows)
        except BasisValidationError as err:
            checks.append(_check("groebner-cross-check", "fail", str(err)))
            checks.append(_check("squarefree-initial", "fail", "basis construction failed"))
            closed = None
        if closed is not None:
            engine = [f.leading_monomial() for f in buchberger(gbei_generators(g, rows).generators)]
            same = monomial_ideal_equal(closed, engine)
            detail = f"{len(closed)} closed-form generators vs {len(engine)} engine leads"
            checks.append(_check("groebner-cross-check", "pass" if same else "fail", detail))
            squarefree = all(m.is_squarefree() for m in engine)
            checks.append(
                _check(
                    "squarefree-initial",
                    "pass" if squarefree else "fail",
                    "all engine lead monomials squarefree" if squarefree else "non-squarefree lead found",
                )
            )

    if with_primes or nvars <= PRIME_CHECK_DEFAULT_LIMIT:
        with watch.time("primes"):
            primes = minimal_primes(g, rows)
            acc = primes[0].ideal
            for p in primes[1:]:
                acc = intersect(acc, p.ideal)
            same = ideal_equal(acc, gbei_generators(g, rows))
        detail = f"intersection of {len(primes)} primes"
        checks.append(_check("prime-intersection", "pass" if same else "fail", detail))
    else:
        checks.append(
            _check(
                "prime-intersection",
                "skipped",
                f"skipped: {nvars} variables > {PRIME_CHECK_DEFAULT_LIMIT} (pass --with-primes to force)",
            )
        )

    if oracle_table is not None:
        betti = {f"{i},{j}": b for (i, j), b in sorted(oracle_table.entries.items())}
    else:
        betti = None
    block = {"checks": checks}
    if betti is not None:
        block["oracle"] = {
            "betti": betti,
            "depth": oracle_table.depth(),
            "projectiveDimension": oracle_table.projective_dimension(),
            "regularity": oracle_table.regularity(),
        }
    return block


def classify_report(g: Graph) -> dict:
    watch = _Stopwatch()
    with watch.time("classify"):
        cls = _classification_block(g)
    with watch.time("census"):
        cen = _census_block(g)
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "classify",
        "input": _input_block(g, None),
        "classification": cls,
        "census": cen,
        "timings": watch.laps,
    }


def invariants_report(g: Graph, rows: int) -> dict:
    watch = _Stopwatch()
    with watch.time("classify"):
        cls = _classification_block(g)
    with watch.time("census"):
        cen = _census_block(g)
    with watch.time("formulas"):
        form = _formula_block(g, rows)
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "invariants",
        "input": _input_block(g, rows),
        "classification": cls,
        "census": cen,
        "formulas": form,
        "timings": watch.laps,
    }


def verify_report(g: Graph, rows: int, max_vars: int = 12, with_primes: bool = False) -> dict:
    watch = _Stopwatch()
    with watch.time("classify"):
        cls = _classification_block(g)
    with watch.time("census"):
        cen = _census_block(g)
    with watch.time("formulas"):
        form = _formula_block(g, rows)
    ver = _verification_block(g, rows, max_vars, with_primes, watch)
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "verify",
        "input": _input_block(g, rows),
        "classification": cls,
        "census": cen,
        "formulas": form,
        "verification": ver,
        "timings": watch.laps,
    }
    return report


def corpus_report(n: int, rows: int, filter_name: str, verify: bool, max_vars: int = 12, with_primes: bool = False) -> dict:
    rows_out = []
    for g in enumerate_connected_graphs(n, None if filter_name == "all" else filter_name):
        entry = {
            "edges": [list(e) for e in g.sorted_edges()],
            "classification": _classification_block(g),
        }
        entry["formulas"] = _formula_block(g, rows)
        if verify:
            watch = _Stopwatch()
            ver = _verification_block(g, rows, max_vars, with_primes, watch)
            entry["verification"] = ver
            entry["verdict"] = verdict_of(ver["checks"])
        else:
            entry["verdict"] = "pass"
        rows_out.append(entry)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for entry in rows_out:
        counts[entry["verdict"]] += 1
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "corpus",
        "input": {"vertices": n, "rows": rows, "filter": filter_name},
        "rows": rows_out,
        "summary": {"graphs": len(rows_out), **counts},
    }


def verdict_of(checks) -> str:
    statuses = {c["status"] for c in checks}
    if "fail" in statuses:
        return "fail"
    if statuses == {"skipped"}:
        return "skipped"
    return "pass"


def has_failure(report: dict) -> bool:
    if report["command"] == "corpus":
        return report["summary"]["fail"] > 0
    ver = report.get("verification")
    return bool(ver) and any(c["status"] == "fail" for c in ver["checks"])


def has_skip(report: dict) -> bool:
    skipped_formula = report.get("formulas", {}).get("status") == "skipped"
    ver = report.get("verification")
    skipped_check = bool(ver) and any(c["status"] == "skipped" for c in ver["checks"])
    if report["command"] == "corpus":
        return report["summary"]["skipped"] > 0 or any(
            r["formulas"]["status"] == "skipped" for r in report["rows"]
        )
    return skipped_formula or skipped_check


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def _fmt_set(s) -> str:
    return "{" + ",".join(str(v) for v in s) + "}"


def render_text(report: dict) -> str:
    lines = []
    cmd = report["command"]
    if cmd == "corpus":
        inp = report["input"]
        lines.append(
            f"corpus: connected graphs on {inp['vertices']} vertices, rows={inp['rows']}, filter={inp['filter']}"
        )
        for idx, row in enumerate(report["rows"], start=1):
            edges = " ".join(f"{u}-{v}" for u, v in row["edges"])
            cls = row["classification"]
            tags = []
            if cls["generalizedBlockGraph"]:
                tags.append("gblock")
            form = row["formulas"]
            if form["status"] == "ok":
                tags.append(f"depth={form['depth']['value']}")
                rel = "=" if form["regularity"]["kind"] == "exact" else "<="
                tags.append(f"reg{rel}{form['regularity']['value']}")
            lines.append(f"  #{idx} [{row['verdict']}] {edges or '(no edges)'} {' '.join(tags)}".rstrip())
        s = report["summary"]
        lines.append(
            f"summary: {s['graphs']} graphs, {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped"
        )
        return "\n".join(lines) + "\n"

    inp = report["input"]
    edges = " ".join(f"{u}-{v}" for u, v in inp["edges"])
    lines.append(f"graph: {inp['vertices']} vertices; edges: {edges or '(none)'}")
    if "rows" in inp:
        lines.append(f"rows: {inp['rows']}")
    c = report["classification"]
    lines.append(
        "classification: chordal={} blockGraph={} generalizedBlockGraph={} cliqueNumber={}".format(
            *(str(c[k]).lower() for k in ("chordal", "blockGraph", "generalizedBlockGraph")),
            c["cliqueNumber"],
        )
    )
    cen = report["census"]
    a_txt = " ".join(f"a_{i}={cen['a'][i]}" for i in sorted(cen["a"], key=int)) or "none"
    lines.append(f"census: cliqueNumber={cen['cliqueNumber']}; minimal cut set counts: {a_txt}")
    for i in sorted(cen["minimalCutSets"], key=int):
        sets = " ".join(_fmt_set(s) for s in cen["minimalCutSets"][i])
        lines.append(f"  minimal cut sets of size {i}: {sets}")
    cps = " ".join(
        f"{_fmt_set(t['set'])}(c={t['components']})" for t in cen["cutPointSets"]
    )
    lines.append(f"  cut-point sets: {cps}")
    form = report.get("formulas")
    if form:
        lines.append(f"dimension: {form['dimension']}; unmixed: {str(form['unmixed']).lower()}")
        if form["status"] == "ok":
            d, r = form["depth"], form["regularity"]
            lines.append(f"depth: {d['value']} ({d['kind']}; {d['provenance']})")
            lines.append(f"regularity: {r['value']} ({r['kind']}; {r['provenance']})")
        else:
            lines.append(f"formulas: skipped ({form['reason']})")
    ver = report.get("verification")
    if ver:
        lines.append("verification:")
        for chk in ver["checks"]:
            lines.append(f"  {chk['name']}: {chk['status']} ({chk['detail']})")
        oracle = ver.get("oracle")
        if oracle:
            betti = " ".join(f"b[{key}]={val}" for key, val in oracle["betti"].items())
            lines.append(
                f"oracle: depth={oracle['depth']} projdim={oracle['projectiveDimension']} "
                f"regularity={oracle['regularity']}"
            )
            lines.append(f"  betti: {betti}")
    timings = report.get("timings")
    if timings:
        stage_txt = " ".join(f"{k}={v}ms" for k, v in sorted(timings.items()))
        lines.append(f"timings: {stage_txt}")
    return "\n".join(lines) + "\n"
