"""Command-line front end.

Subcommands: faces, genus, check, dual, compare, witness, census and
verify.  Embedding arguments are rotation files; graph arguments are
graph6 (a file or a literal string) or a rotation file, whose underlying
graph is taken.  ``--json`` switches reports to JSON with a stable key
order; output is deterministic byte-for-byte for identical invocations.

Exit codes: 0 when the command succeeds and any claim it checks holds,
1 when a claim fails or a violation is found (the certificate is in the
report), 2 on usage, parse or precondition errors.
"""

import argparse
import json
import sys
from pathlib import Path

from . import census as census_mod
from .compare import classify_types
from .embedmap import EmbeddedGraph, genus, trace_faces
from .errors import RotsysError
from .formats import parse_graph6, parse_rotation_file
from .graphs import SimpleGraph
from .polyhedral import BadPair, NonSimpleFace, build_dual, check_polyhedral
from .witness import CrossingPair, MixedEdge, extract_witness

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_ERROR = 2


# ---------------------------------------------------------------------------
# input loading
# ---------------------------------------------------------------------------

def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise RotsysError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_embedding(path: str) -> EmbeddedGraph:
    return parse_rotation_file(_read_file(path))


def _looks_like_rotation_file(text: str) -> bool:
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        return len(tokens) == 2 and all(t.isdigit() for t in tokens)
    return False


def _load_graph(arg: str) -> SimpleGraph:
    """A graph argument: a rotation/graph6 file, or a literal graph6 string."""
    if Path(arg).exists():
        text = _read_file(arg)
        if _looks_like_rotation_file(text):
            return SimpleGraph.from_embedding(parse_rotation_file(text))
        return parse_graph6(text)
    return parse_graph6(arg)


# ---------------------------------------------------------------------------
# JSON helpers (plain dicts with deterministic insertion order)
# ---------------------------------------------------------------------------

def _dart_json(d) -> list:
    return [d.tail, d.head]

def _walk_json(w) -> list:
    return [_dart_json(d) for d in w]

def _embedding_json(g: EmbeddedGraph) -> dict:
    return {"n": g.n, "rotations": [list(r) for r in g.rotations]}

def _intersection_json(kind) -> dict:
    return {
        "tag": kind.tag.value,
        "shared_vertices": sorted(kind.shared_vertices),
        "shared_edges": sorted(list(e) for e in kind.shared_edges),
    }

def _violation_json(violation) -> dict | None:
    if violation is None:
        return None
    if isinstance(violation, NonSimpleFace):
        return {"kind": "non_simple_face", "face": _walk_json(violation.face)}
    return {
        "kind": "bad_pair",
        "faces": list(violation.faces),
        "intersection": _intersection_json(violation.kind),
    }


def _walk_text(w) -> str:
    return " ".join(f"({d.tail},{d.head})" for d in w)


def _rotations_text(g: EmbeddedGraph) -> str:
    return " ".join(f"{v}:({','.join(map(str, r))})" for v, r in enumerate(g.rotations))


def _emit(args, report: dict, lines: list) -> None:
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_faces(args) -> int:
    g = _load_embedding(args.file)
    faces = trace_faces(g)
    report = {
        "command": "faces",
        "inputs": [args.file],
        "face_count": len(faces),
        "faces": [_walk_json(w) for w in faces],
    }
    lines = [f"faces: {len(faces)}"]
    lines += [f"face {i}: {_walk_text(w)}" for i, w in enumerate(faces)]
    _emit(args, report, lines)
    return EXIT_OK


def _cmd_genus(args) -> int:
    g = _load_embedding(args.file)
    value = genus(g)
    _emit(
        args,
        {"command": "genus", "inputs": [args.file], "genus": value},
        [f"genus: {value}"],
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_embedding(args.file)
    verdict = check_polyhedral(g)
    value = genus(g)
    report = {
        "command": "check",
        "inputs": [args.file],
        "polyhedral": verdict.polyhedral,
        "genus": value,
        "violation": _violation_json(verdict.violation),
    }
    lines = [f"polyhedral: {str(verdict.polyhedral).lower()}, genus: {value}"]
    if isinstance(verdict.violation, NonSimpleFace):
        lines.append(f"violation: non-simple face {_walk_text(verdict.violation.face)}")
    elif isinstance(verdict.violation, BadPair):
        i, j = verdict.violation.faces
        kind = verdict.violation.kind
        verts = ",".join(map(str, sorted(kind.shared_vertices)))
        edges = ",".join(f"({u},{v})" for u, v in sorted(kind.shared_edges))
        lines.append(
            f"violation: faces {i} and {j} share vertices {verts} and edges {edges or '-'}"
        )
    _emit(args, report, lines)
    return EXIT_OK if verdict.polyhedral else EXIT_CLAIM_FAILED


def _cmd_dual(args) -> int:
    g = _load_embedding(args.file)
    dual = build_dual(g)
    report = {
        "command": "dual",
        "inputs": [args.file],
        "vertices": dual.num_vertices,
        "edges": len(dual.edges),
        "loops": dual.loop_count,
        "parallel_edges": dual.parallel_edge_count,
        "simple": dual.is_simple,
        "edge_list": [list(e) for e in dual.edges],
    }
    lines = [
        f"dual: {dual.num_vertices} vertices, {len(dual.edges)} edges, "
        f"{dual.loop_count} loops, {dual.parallel_edge_count} parallel edges, "
        f"simple: {str(dual.is_simple).lower()}"
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _cmd_compare(args) -> int:
    gref = _load_embedding(args.ref)
    gcand = _load_embedding(args.cand)
    assignment = classify_types(gref, gcand)
    report = {
        "command": "compare",
        "inputs": [args.ref, args.cand],
        "relation": assignment.relation.value,
        "types": {str(v): assignment.types[v] for v in sorted(assignment.types)},
    }
    fmt = {1: "+1", -1: "-1", 2: "2"}
    lines = [
        f"relation: {assignment.relation.value}",
        "types: " + " ".join(f"{v}:{fmt[assignment.types[v]]}" for v in sorted(assignment.types)),
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _anchor_json(anchor) -> dict:
    if isinstance(anchor, MixedEdge):
        return {"kind": "mixed_edge", "edge": _dart_json(anchor.edge)}
    return {
        "kind": "type2_vertex",
        "vertex": anchor.vertex,
        "first_angle": [_dart_json(d) for d in anchor.first_angle],
        "second_angle": [_dart_json(d) for d in anchor.second_angle],
    }


def _anchor_text(anchor) -> str:
    if isinstance(anchor, MixedEdge):
        return f"anchor: mixed edge ({anchor.edge.tail},{anchor.edge.head})"
    a, b = anchor.first_angle, anchor.second_angle
    return (
        f"anchor: type-2 vertex {anchor.vertex}, "
        f"angles {{({a[0].tail},{a[0].head}),({a[1].tail},{a[1].head})}} "
        f"and {{({b[0].tail},{b[0].head}),({b[1].tail},{b[1].head})}}"
    )


def _cmd_witness(args) -> int:
    gref = _load_embedding(args.ref)
    gcand = _load_embedding(args.cand)
    result = extract_witness(gref, gcand)
    if isinstance(result.certificate, NonSimpleFace):
        cert_json = {
            "kind": "non_simple_face",
            "face": _walk_json(result.certificate.face),
        }
        cert_text = f"certificate: non-simple face {_walk_text(result.certificate.face)}"
    else:
        cert: CrossingPair = result.certificate
        verts = ",".join(map(str, sorted(cert.kind.shared_vertices)))
        edges = ",".join(f"({u},{v})" for u, v in sorted(cert.kind.shared_edges))
        cert_json = {
            "kind": "crossing_pair",
            "face_a": _walk_json(cert.face_a),
            "face_b": _walk_json(cert.face_b),
            "intersection": _intersection_json(cert.kind),
        }
        cert_text = (
            f"certificate: faces {_walk_text(cert.face_a)} and {_walk_text(cert.face_b)} "
            f"share vertices {verts} and edges {edges or '-'}"
        )
    report = {
        "command": "witness",
        "inputs": [args.ref, args.cand],
        "anchor": _anchor_json(result.anchor),
        "certificate": cert_json,
    }
    _emit(args, report, [_anchor_text(result.anchor), cert_text])
    return EXIT_OK


def _cmd_census(args) -> int:
    graph = _load_graph(args.graph)
    report_data = census_mod.genus_census(graph, graph_id=args.graph, budget=args.budget)
    reps = report_data.polyhedral_representatives
    report = {
        "command": "census",
        "inputs": [args.graph],
        "graph_id": report_data.graph_id,
        "total": report_data.total,
        "raw_by_genus": {str(k): v for k, v in report_data.raw_by_genus.items()},
        "classes_by_genus": {str(k): v for k, v in report_data.classes_by_genus.items()},
        "polyhedral_classes": report_data.polyhedral_classes,
        "polyhedral_representatives": [_embedding_json(g) for g in reps],
    }
    lines = [f"graph: {report_data.graph_id}", f"rotation systems: {report_data.total}"]
    for g_val in sorted(report_data.raw_by_genus):
        lines.append(
            f"genus {g_val}: raw {report_data.raw_by_genus[g_val]}, "
            f"classes {report_data.classes_by_genus[g_val]}"
        )
    lines.append(f"polyhedral classes: {report_data.polyhedral_classes}")
    for i, rep in enumerate(reps):
        lines.append(f"polyhedral representative {i}: genus {genus(rep)}, {_rotations_text(rep)}")
    _emit(args, report, lines)
    return EXIT_OK


_VERIFIERS = {
    "whitney": census_mod.verify_whitney,
    "cubic": census_mod.verify_cubic_corollary,
    "cuts": census_mod.verify_low_connectivity,
    "planar": census_mod.verify_planar_polyhedral,
}


def _cmd_verify(args) -> int:
    graph = _load_graph(args.graph)
    result = _VERIFIERS[args.claim](graph, budget=args.budget)
    report = {
        "command": "verify",
        "inputs": [args.claim, args.graph],
        "claim": result.claim.value,
        "pass": result.passed,
        "counterexample": (
            None if result.counterexample is None else _embedding_json(result.counterexample)
        ),
    }
    lines = [f"claim: {result.claim.value}", f"pass: {str(result.passed).lower()}"]
    if args.claim == "whitney" and result.passed:
        summary = census_mod.genus_census(graph, graph_id=args.graph, budget=args.budget)
        report["polyhedral_classes"] = summary.polyhedral_classes
        report["polyhedral_genus"] = 0
        lines.append(f"polyhedral classes: {summary.polyhedral_classes}, genus: 0")
    if result.counterexample is not None:
        lines.append(f"counterexample: {_rotations_text(result.counterexample)}")
    _emit(args, report, lines)
    return EXIT_OK if result.passed else EXIT_CLAIM_FAILED


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotsys",
        description="Rotation-system toolkit: faces, genus, polyhedrality, "
        "embedding-uniqueness certificates and exhaustive verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument(
        "--budget",
        type=int,
        default=census_mod.DEFAULT_BUDGET,
        help="largest rotation-system space to enumerate (default %(default)s)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("faces", parents=[common], help="list the facial walks")
    p.add_argument("file")
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("genus", parents=[common], help="genus via the Euler formula")
    p.add_argument("file")
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("check", parents=[common], help="polyhedrality verdict")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("dual", parents=[common], help="dual multigraph summary")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("compare", parents=[common], help="vertex types and relation")
    p.add_argument("ref")
    p.add_argument("cand")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("witness", parents=[common], help="non-polyhedrality certificate")
    p.add_argument("ref")
    p.add_argument("cand")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("census", parents=[common, budget], help="genus census of all rotation systems")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", parents=[common, budget], help="exhaustively verify a claim")
    p.add_argument("claim", choices=sorted(_VERIFIERS))
    p.add_argument("graph")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    """Parse arguments, run the subcommand, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except RotsysError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None) -> int:
    return run(argv)
