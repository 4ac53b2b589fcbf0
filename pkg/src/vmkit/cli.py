"""Command-line front door.

Exit codes: 0 success or claim verified, 1 claim refuted or nothing
found, 2 usage or parse error, 3 inconclusive (budget ran out, or a
guarantee-mode extractor refused).
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from . import campaigns
from .blocking import find_blocking_sequence, is_blocking_sequence
from .families import FamilyError, LadderView, make
from .graph import GraphError
from .io import ParseError, read_graph, write_graph
from .rank import cut_rank, cutrank_profile
from .search import Inconclusive, is_vertex_minor, local_orbit, locally_equivalent
from .structure import find_split, is_prime
from .trace import OpTrace, replay

OK, REFUTED, USAGE, INCONCLUSIVE = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise _Usage(f"expected integers, got {text!r}") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _graph(path: str, fmt: str | None):
    return read_graph(_read_text(path), fmt)


def _family(spec: str):
    try:
        return make(spec)
    except FamilyError:
        return None


def _load(arg: str, fmt: str | None):
    # a file path, or an inline family spec such as "cycle 5"
    g = _family(arg)
    return g if g is not None else _graph(arg, fmt)


class _Out:
    def __init__(self, path: str | None):
        self.fh = open(path, "w") if path else sys.stdout

    def line(self, text: str = "") -> None:
        self.fh.write(text if text.endswith("\n") else text + "\n")

    def close(self) -> None:
        if self.fh is not sys.stdout:
            self.fh.close()


# -- subcommands -----------------------------------------------------------


def cmd_gen(a, out: _Out) -> int:
    words = a.spec
    if words[0] == "random":
        if len(words) != 3:
            raise _Usage("usage: gen random N P")
        n, p = int(words[1]), float(words[2])
        g = campaigns.random_graph(n, p, random.Random(a.seed))
    else:
        try:
            g = make(" ".join(words))
        except FamilyError as exc:
            raise _Usage(str(exc)) from None
    out.line(write_graph(g, a.format or "g6"))
    return OK


def cmd_op(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    t = OpTrace.from_text(_read_text(a.trace))
    res = replay(g, t)
    out.line(write_graph(res.graph, a.format or "g6"))
    if res.verified is False:
        print(f"claim {t.claim!r} refuted", file=sys.stderr)
        return REFUTED
    return OK


def cmd_cutrank(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    out.line(str(cut_rank(g, _ints(a.set))))
    return OK


def cmd_profile(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    prof = cutrank_profile(g, a.anchor, a.size, a.rank)
    for s in prof.sets:
        out.line(" ".join(map(str, s)))
    out.line(f"# count {len(prof.sets)}")
    return OK


def cmd_prime(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    yes = is_prime(g)
    out.line("prime" if yes else "not prime")
    return OK if yes else REFUTED


def cmd_split(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    s = find_split(g)
    if s is None:
        out.line("none")
        return REFUTED
    out.line(s.text())
    return OK


def cmd_block(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    A, B = _ints(a.A), _ints(a.B)
    if a.action == "check":
        chk = is_blocking_sequence(g, A, B, _ints(a.seq))
        if chk.ok:
            out.line("blocking")
            return OK
        out.line(f"not blocking: condition {chk.condition} at {chk.index}")
        return REFUTED
    bs = find_blocking_sequence(g, A, B)
    if bs is None:
        out.line("none")
        return REFUTED
    out.line(" ".join(map(str, bs.seq)))
    return OK


def cmd_vm_check(a, out: _Out) -> int:
    h = _load(a.target, a.format)
    g = _load(a.input, a.format)
    w = is_vertex_minor(h, g, budget_ms=a.budget)
    if w is None:
        out.line("none")
        return REFUTED
    out.line(w.trace.to_text())
    return OK


def cmd_locally_equivalent(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    h = _load(a.target, a.format)
    got = locally_equivalent(g, h, budget_ms=a.budget)
    if got is None:
        out.line("none")
        return REFUTED
    word, mapping = got
    out.line("LC " + " ".join(map(str, word)) if word else "LC")
    out.line("MAP " + " ".join(f"{u}:{v}" for u, v in sorted(mapping.items())))
    return OK


def cmd_orbit(a, out: _Out) -> int:
    g = _load(a.input, a.format)
    orb = local_orbit(g, a.limit, budget_ms=a.budget)
    for code, word in sorted(orb.codes.items()):
        out.line(json.dumps({"code": code.decode(), "word": list(word)}))
    out.line(json.dumps({"size": orb.size, "complete": orb.complete}))
    return OK if orb.complete else INCONCLUSIVE


def cmd_extract(a, out: _Out) -> int:
    from .extract import cycles, ladder, patch

    g = _load(a.input, a.format)
    m = a.target_cycle
    if a.kind == "fan":
        rep = cycles.fan_to_cycle(g)
    elif a.kind == "ladder":
        p, q = _ints(a.p), _ints(a.q)
        if not p or not q:
            raise _Usage("extract ladder needs --p and --q")
        n = max(1, math.ceil((m - 3) / 4)) if m else 1
        rep = ladder.ladder_to_cycle(LadderView.build(g, p, q), n, best_effort=a.best_effort)
    else:
        n = patch.cycle_target(m) if m else 1
        rep = patch.path_to_cycle(g, n, path=_ints(a.path) or None, best_effort=a.best_effort)
    if rep is None:
        out.line("none")
        return REFUTED
    if m and rep.length > m:
        rep = _shrink(g, rep, m)
    out.line(rep.trace.to_text())
    stats = {k: v for k, v in rep.stats.items() if isinstance(v, (int, float, str, list))}
    out.line("# " + json.dumps({"target": rep.target, **stats}))
    return OK


def _shrink(g, rep, m):
    from .extract import Workspace, shrink_cycle
    from .extract.cycles import walk_cycle
    from .trace import apply_steps

    if not rep.target.startswith("cycle"):
        return rep
    ws = Workspace(g)
    apply_steps(ws.work, rep.trace.steps)
    ws.steps.extend(rep.trace.steps)
    ws.keep_only(rep.trace.keep)
    order = walk_cycle(ws, ws.vertices())
    return ws.finish(shrink_cycle(ws, order, m), route=rep.stats.get("route"))


def cmd_verify(a, out: _Out) -> int:
    try:
        cfg = campaigns.CampaignConfig(a.suite, min_n=a.min_n, max_n=a.max_n, seed=a.seed,
                                       jobs=a.jobs, budget_ms=a.budget, out=a.out)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    rep = campaigns.run_campaign(cfg)
    for rec in rep.records:
        out.line(json.dumps(rec, sort_keys=True))
    out.line(json.dumps({"summary": rep.summary()}, sort_keys=True))
    return OK if rep.ok else REFUTED


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("g6", "edges"))
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=float, default=None, help="milliseconds; default from VMKIT_BUDGET_MS")
    common.add_argument("--best-effort", action="store_true")
    common.add_argument("--out")

    ap = argparse.ArgumentParser(prog="vmkit", description="Vertex-minor toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gen", cmd_gen, help="print a family member or a seeded random graph")
    sp.add_argument("spec", nargs="+")
    sp = add("op", cmd_op, help="apply a trace file")
    sp.add_argument("trace")
    sp.add_argument("--in", dest="input", required=True)
    sp = add("cutrank", cmd_cutrank)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--set", required=True)
    sp = add("profile", cmd_profile)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--anchor", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--rank", type=int, required=True)
    sp = add("prime", cmd_prime)
    sp.add_argument("--in", dest="input", required=True)
    sp = add("split", cmd_split)
    sp.add_argument("--in", dest="input", required=True)
    sp = add("block", cmd_block)
    sp.add_argument("action", choices=("find", "check"))
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--seq", default="")
    sp.add_argument("--A", required=True)
    sp.add_argument("--B", required=True)
    sp = add("vm-check", cmd_vm_check)
    sp.add_argument("--target", required=True)
    sp.add_argument("--in", dest="input", required=True)
    sp = add("locally-equivalent", cmd_locally_equivalent)
    sp.add_argument("--target", required=True)
    sp.add_argument("--in", dest="input", required=True)
    sp = add("orbit", cmd_orbit)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--limit", type=int)
    sp = add("extract", cmd_extract)
    sp.add_argument("kind", choices=("fan", "ladder", "path"))
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--target-cycle", type=int)
    sp.add_argument("--p")
    sp.add_argument("--q")
    sp.add_argument("--path")
    sp = add("verify", cmd_verify)
    sp.add_argument("suite")
    sp.add_argument("--min-n", type=int, default=5)
    sp.add_argument("--max-n", type=int, default=7)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    out = _Out(a.out if a.cmd != "verify" or a.out else None)
    try:
        return a.fn(a, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except GraphError as exc:
        from .extract import ExtractionRefused

        if isinstance(exc, ExtractionRefused):
            print(f"refused: {exc}", file=sys.stderr)
            return INCONCLUSIVE
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
