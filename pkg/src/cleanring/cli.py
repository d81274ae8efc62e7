"""Command-line front end: ``census``, ``verify``, ``search`` and ``corpus list``.

Exit codes: 0 success, 1 a check reported a counterexample, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
import time

from .classify import element_profile, parse_central_polynomial, ring_census
from .dsl import build_spec
from .errors import RingError, UnknownCheck
from .report import FORMATS, ReportDocument
from .search import (
    Caps,
    CorpusEntry,
    attach_polynomials,
    corpus_generate,
    default_corpus,
    find_witness,
    parse_query,
)
from .star import involution_by_name, standard_involutions
from .structure import ideal_closure
from .theorems import CATALOG, CHECK_IDS, COUNTEREXAMPLE, NOT_APPLICABLE, run_check, suite_inputs

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2

# role names for the two parts of a witness pair, by flag
_ROLES = {
    "clean": ("u", "e"), "weakly_clean": ("u", "e"), "weakly_clean_t1": ("u", "e"),
    "weakly_clean_t2": ("u", "e"), "strongly_clean": ("u", "e"),
    "r_clean": ("r", "e"), "weakly_r_clean": ("r", "e"), "weakly_r_clean_t1": ("r", "e"),
    "weakly_r_clean_t2": ("r", "e"),
    "star_clean": ("u", "p"), "weakly_star_clean": ("u", "p"), "weakly_star_clean_t1": ("u", "p"),
    "weakly_star_clean_t2": ("u", "p"), "strongly_star_clean": ("u", "p"),
    "star_r_clean": ("r", "p"), "sasr1_decomp": ("u", "s"), "two_p_plus_one_decomp": ("u", "p"),
    "g_clean": ("u", "s"), "strongly_g_clean": ("u", "s"),
    "g_r_clean": ("r", "s"), "weakly_g_r_clean": ("r", "s"), "weakly_g_r_clean_t1": ("r", "s"),
    "weakly_g_r_clean_t2": ("r", "s"),
}


def _witness_dict(ring, flag, w):
    if flag == "unit":
        return {"inverse": ring.name(w[0])}
    if flag == "regular":
        return {"y": ring.name(w[0])}
    if flag == "nilpotent":
        return {"index": w[0]}
    if "exchange" in flag:
        return {"e": ring.name(w[0]), "branch": w[1]}
    first, second = _ROLES.get(flag, ("a", "b"))
    if len(w) == 3:
        return {"type": w[0], first: ring.name(w[1]), second: ring.name(w[2])}
    return {first: ring.name(w[0]), second: ring.name(w[1])}


def _parse_caps(text):
    if not text:
        return Caps()
    values = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in Caps.__dataclass_fields__ or not value.strip().isdigit():
            raise ValueError(f"bad cap {part!r}; use e.g. size=64,zn=12")
        values[key] = int(value)
    return Caps(**values)


def _resolve(spec, star=None, g=None):
    built = build_spec(spec)
    ring, inv = built.ring, built.involution
    if star:
        inv = involution_by_name(ring, star)
    poly = parse_central_polynomial(ring, g) if g else None
    return ring, inv, poly


def cmd_census(args):
    ring, inv, poly = _resolve(args.spec, args.star, args.g)
    label = inv.provenance if inv is not None else ring.provenance
    doc = ReportDocument("census", args.spec, format=args.format)
    start = time.perf_counter_ns()
    if args.element is not None:
        x = ring.element(args.element)
        prof = element_profile(ring, x, inv, poly)
        nanos = time.perf_counter_ns() - start
        for flag, ok in prof.flags.items():
            w = prof.witnesses.get(flag)
            doc.add("element", f"{label} @ {prof.name}", flag, str(ok).lower(),
                    _witness_dict(ring, flag, w) if w is not None else None, nanos)
        return doc, EXIT_OK
    census = ring_census(ring, inv, poly)
    nanos = time.perf_counter_ns() - start
    for key, count in census.counts.items():
        doc.add("count", label, key, str(count), None, nanos)
    for flag, value in census.flags.items():
        w = census.witness(flag)
        doc.add("census", label, flag, str(value).lower(),
                ring.name(w) if w is not None else None, nanos)
    return doc, EXIT_OK


def _entry_for(spec):
    built = build_spec(spec)
    ring = built.ring
    invs = [built.involution] if built.involution is not None else standard_involutions(ring)
    return CorpusEntry(ring, list(invs), attach_polynomials(ring), ("cli",))


def _check_ids(text):
    if text == "all":
        return list(CHECK_IDS)
    ids = [t.strip() for t in text.split(",") if t.strip()]
    for cid in ids:
        if cid not in CATALOG:
            raise UnknownCheck(f"unknown check {cid!r}; known: C01-C33")
    return ids


def _report_row(doc, rep):
    witness = rep.witness
    if rep.notes:
        witness = dict(witness or {}, notes=rep.notes)
    doc.add("check", rep.inputs, rep.check_id, rep.status, witness, int(rep.elapsed * 1e9))


def cmd_verify(args):
    ids = _check_ids(args.ids)
    if args.corpus and args.specs:
        raise ValueError("give spec expressions or --corpus, not both")
    doc = ReportDocument("verify", " ".join([args.ids] + args.specs), format=args.format)
    if args.ideal and len(args.specs) != 1:
        raise ValueError("--ideal needs exactly one spec")
    if args.corpus or not args.specs:
        caps = _parse_caps(args.caps)
        corpus = default_corpus() if not args.caps else corpus_generate(caps)
        doc.caps = vars(caps)
        entries = corpus
    else:
        entries = [_entry_for(s) for s in args.specs]
    bad = False
    for cid in ids:
        ran = 0
        if args.ideal:
            ring = entries[0].ring
            ideal = ideal_closure(ring, [ring.element(t) for t in args.ideal.split(";")])
            required = CATALOG[cid].required
            inputs = {"ring": ring, "ideal": ideal} if "ring" in required else \
                {"involution": entries[0].involutions[0], "ideal": ideal}
            runs = [inputs]
        else:
            runs = suite_inputs(cid, entries)
        for inputs in runs:
            rep = run_check(cid, **inputs)
            _report_row(doc, rep)
            bad |= rep.status == COUNTEREXAMPLE
            ran += 1
        if ran == 0:
            doc.add("check", ";".join(e.provenance for e in entries), cid, NOT_APPLICABLE,
                    {"reason": "no input of the required shape"}, 0)
    counts = {}
    for r in doc.rows:
        counts[r.status] = counts.get(r.status, 0) + 1
    doc.notes.append("summary " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return doc, EXIT_COUNTEREXAMPLE if bad else EXIT_OK


_CLEAN_NOTE = ("every finite ring is clean, so the clean-type notions cannot be separated "
               "on a finite corpus")


def cmd_search(args):
    query = parse_query(args.query, scope=args.scope)
    caps = _parse_caps(args.caps)
    corpus = default_corpus() if not args.caps else corpus_generate(caps)
    result = find_witness(query, corpus)
    doc = ReportDocument("search", args.query, vars(caps), format=args.format)
    nanos = int(result.elapsed * 1e9)
    for w in result.witnesses:
        ring = w.ring if w.star is None else f"star({w.ring},{w.star})"
        found = {k: v for k, v in (("element", w.element_name), ("g", w.g)) if v is not None}
        doc.add("witness", ring, args.query, "found", found or None, nanos)
    doc.notes.append(f"scanned {result.scanned_rings} rings, {result.scanned_pairs} ring contexts")
    if not result.witnesses:
        doc.notes.append("no witness in corpus")
        negated = {name for name, want in query.terms if not want}
        if negated & {"is_clean", "is_r_clean", "is_exchange", "is_weakly_clean", "is_weakly_r_clean"}:
            doc.notes.append(_CLEAN_NOTE)
    return doc, EXIT_OK


def cmd_corpus(args):
    caps = _parse_caps(args.caps)
    corpus = default_corpus() if not args.caps else corpus_generate(caps)
    doc = ReportDocument("corpus list", "", vars(caps), format=args.format)
    for entry in corpus:
        doc.add("entry", entry.provenance, ",".join(entry.tags), str(entry.ring.size),
                {"involutions": [i.name for i in entry.involutions],
                 "polynomials": [g.text for g in entry.polynomials]})
    doc.notes.append(f"{len(corpus)} entries")
    return doc, EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="cleanring", description="Clean-type decompositions in finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="human")

    p = sub.add_parser("census", help="flag table for one ring, or one element's profile")
    p.add_argument("spec")
    p.add_argument("--element")
    p.add_argument("--star", help="involution name (id, swap, transpose, frobenius, enumerated:<k>)")
    p.add_argument("--g", help="integer polynomial such as x^2-x")
    fmt(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run checks C01-C33")
    p.add_argument("ids", help="'all' or comma-separated ids such as C10,C20")
    p.add_argument("specs", nargs="*")
    p.add_argument("--corpus", action="store_true")
    p.add_argument("--ideal", help="ideal generators separated by ';' (one spec only)")
    p.add_argument("--caps")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="witnesses for a flag query over the corpus")
    p.add_argument("query")
    p.add_argument("--caps", help="e.g. size=64,zn=12,product=64,involutions=16")
    p.add_argument("--scope", help="restrict to one corpus ring by provenance")
    fmt(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("corpus", help="corpus inspection")
    p.add_argument("action", choices=["list"])
    p.add_argument("--caps")
    fmt(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        doc, code = args.func(args)
    except (RingError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.write(doc.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
