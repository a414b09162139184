"""Command-line front end: every capability as one subcommand.

Output discipline: every run prints a manifest header (tool version,
subcommand, the flags verbatim, a sha256 per input file, and the seed when
randomness is involved) followed by the results, so any output file is
self-describing and a rerun of the same invocation is byte-identical.
Text mode prints numbers with six decimal places, trailing zeros trimmed;
``--json`` emits one document with a fixed key order and full-precision
floats.

Exit codes: 0 on success, 2 for input or validation problems (one line on
stderr), 64 for usage errors such as unknown subcommands or malformed flags.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import shlex
import sys

from . import __version__
from .fileio import (
    FileFormatError,
    parse_coloring,
    parse_digraph,
    parse_graph,
    parse_intervals,
    parse_lengths,
    parse_pmf,
    parse_positions,
    parse_vertex_map,
    parse_weighted_graph,
)
from .fusion import (
    Inconsistent,
    Interval,
    IntervalSet,
    fusion_compare,
    m_function,
    n_function,
    overlap_function,
    s_function,
)
from .gossip import (
    GossipConfig,
    assign_levels,
    assign_sectors,
    simulate_gossip,
    trial_outcomes,
)
from .graphs import (
    _vkey,
    conditional_graph_entropy,
    degree_pmf,
    graph_entropy,
    graph_kl_divergence,
    graph_mutual_information,
    in_out_degree_pmfs,
    is_regular,
    minimum_spanning_tree,
    mst_entropy_extrema,
    spanning_tree_entropy_extrema,
    tsallis_graph_entropy,
)
from .hierarchy import (
    assign_leaders,
    last_link_failure_probability,
    path_reliability,
    total_nodes,
    verify_secure,
)
from .multicast import plan_cost_audit, plan_multicast
from .source_coding import (
    CodeLengthSet,
    arithmetic_progression_satisfies_kraft,
    code_from_lengths,
    consecutive_lengths_sum,
    expected_length,
    huffman_code,
    kraft_alphabet_monotonicity,
    kraft_sum,
    satisfies_kraft,
    shannon_entropy,
)

USAGE_EXIT = 64
VALIDATION_EXIT = 2


class _Parser(argparse.ArgumentParser):
    """argparse with the usage exit code this tool promises."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    """Six decimal places, trailing zeros trimmed; integers unchanged."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    s = f"{float(x):.6f}".rstrip("0").rstrip(".")
    return s if s and s != "-0" else "0"


def _digits_str(digits) -> str:
    if all(d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return ".".join(str(d) for d in digits)


class Inputs:
    """Reads and fingerprints input files; '-' means standard input."""

    def __init__(self):
        self.records = []  # (display path, sha256 hex)
        self._stdin_cache = None

    def read(self, path: str) -> str:
        if path == "-":
            if self._stdin_cache is None:
                self._stdin_cache = sys.stdin.buffer.read()
            data = self._stdin_cache
        else:
            try:
                with open(path, "rb") as fh:
                    data = fh.read()
            except OSError as err:
                raise FileFormatError(f"cannot read {path}: {err.strerror}") from err
        self.records.append((path, hashlib.sha256(data).hexdigest()))
        return data.decode("utf-8")


class Report:
    """Collects the manifest and result lines/fields for both output modes."""

    def __init__(self, subcommand: str, argv: list, inputs: Inputs, seed=None):
        self.manifest = {
            "tool": "prefixcast",
            "version": __version__,
            "subcommand": subcommand,
            "flags": shlex.join(argv),
            "inputs": [{"path": p, "sha256": h} for p, h in inputs.records],
        }
        if seed is not None:
            self.manifest["seed"] = seed
        self.lines = []   # text-mode body
        self.result = {}  # machine-mode body, insertion order = output order

    def field(self, key: str, value, text=None):
        """A named value present in both modes."""
        self.result[key] = value
        if text is None:
            if isinstance(value, float):
                text = fmt(value)
            elif isinstance(value, bool):
                text = "true" if value else "false"
            else:
                text = str(value)
        self.lines.append(f"{key} {text}")
        return self

    def row(self, text_line: str):
        """A text-only table row (its data must also appear in result)."""
        self.lines.append(text_line)
        return self

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(
                {"manifest": self.manifest, "result": self.result}, indent=2
            )
        head = [
            f"# prefixcast {self.manifest['version']}",
            f"# subcommand: {self.manifest['subcommand']}",
            f"# flags: {self.manifest['flags']}",
        ]
        for rec in self.manifest["inputs"]:
            head.append(f"# input: {rec['path']} sha256={rec['sha256']}")
        if "seed" in self.manifest:
            head.append(f"# seed: {self.manifest['seed']}")
        return "\n".join(head + self.lines)


def _csv_ints(text: str, what: str) -> tuple:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}")


def _csv_floats(text: str, what: str) -> tuple:
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated numbers, got {text!r}")


def _interval_fields(rep: Report, prefix: str, value):
    """Uniform rendering for Interval / None / Inconsistent results."""
    if value is None:
        rep.result[prefix] = None
        rep.row(f"{prefix} empty")
    elif isinstance(value, Inconsistent):
        rep.result[prefix] = {"inconsistent": True, "a": value.a, "b": value.b}
        rep.row(f"{prefix} inconsistent a={fmt(value.a)} b={fmt(value.b)}")
    else:
        rep.result[prefix] = {"lo": value.lo, "hi": value.hi, "width": value.width}
        rep.row(f"{prefix} [{fmt(value.lo)}, {fmt(value.hi)}] width {fmt(value.width)}")


# ----------------------------------------------------------- subcommands


def cmd_kraft(args, argv, inputs):
    sources = [
        s for s in (args.lengths, args.lengths_file, args.consecutive, args.progression)
        if s is not None
    ]
    if len(sources) != 1:
        raise ValueError(
            "exactly one of --lengths, --lengths-file, --consecutive, "
            "--progression is required"
        )
    d = args.D
    if args.consecutive is not None:
        parts = _csv_ints(args.consecutive, "--consecutive")
        if len(parts) != 2:
            raise ValueError("--consecutive needs exactly N1,M")
        n1, m = parts
        total = consecutive_lengths_sum(n1, m, d)
        lengths = CodeLengthSet(tuple(range(n1, n1 + m)), d)
        ok = satisfies_kraft(lengths)
    elif args.progression is not None:
        parts = _csv_ints(args.progression, "--progression")
        if len(parts) != 3:
            raise ValueError("--progression needs exactly N1,STEP,M")
        n1, step, m = parts
        total, ok = arithmetic_progression_satisfies_kraft(n1, step, m, d)
        lengths = CodeLengthSet(tuple(n1 + k * step for k in range(m)), d)
    else:
        if args.lengths_file is not None:
            lengths = parse_lengths(inputs.read(args.lengths_file), d, args.lengths_file)
        else:
            lengths = CodeLengthSet(_csv_ints(args.lengths, "--lengths"), d)
        total = kraft_sum(lengths)
        ok = satisfies_kraft(lengths)
    rep = Report("kraft", argv, inputs)
    rep.field("D", d)
    rep.field("lengths", ",".join(str(n) for n in lengths.lengths))
    rep.field("sum", total)
    rep.field("satisfied", ok)
    rep.row("SATISFIED" if ok else "VIOLATED")
    rep.result["verdict"] = "SATISFIED" if ok else "VIOLATED"
    if args.check_at is not None:
        if not ok:
            raise ValueError("Kraft fails at the base alphabet; nothing to enlarge")
        rep.field(f"satisfied_at_{args.check_at}", kraft_alphabet_monotonicity(lengths, args.check_at))
    return rep


def cmd_huffman(args, argv, inputs):
    pmf = parse_pmf(inputs.read(args.pmf), args.pmf)
    code = huffman_code(pmf, args.D)
    rep = Report("huffman", argv, inputs)
    rep.field("D", args.D)
    rep.field("symbols", len(pmf))
    table = []
    for label, p in pmf.entries:
        word = code.assignments[label]
        table.append(
            {
                "label": label,
                "codeword": _digits_str(word.digits),
                "length": word.length,
                "probability": p,
            }
        )
        rep.row(f"{label} {_digits_str(word.digits)} {word.length} {fmt(p)}")
    rep.result["code"] = table
    rep.field("expected_length", expected_length(code, pmf))
    rep.field("entropy_base_D", shannon_entropy(pmf, base=float(args.D)))
    rep.field("kraft_sum", kraft_sum(code.length_set()))
    return rep


def cmd_code_from_lengths(args, argv, inputs):
    if (args.lengths is None) == (args.lengths_file is None):
        raise ValueError("exactly one of --lengths or --lengths-file is required")
    if args.lengths_file is not None:
        lengths = parse_lengths(inputs.read(args.lengths_file), args.D, args.lengths_file)
    else:
        lengths = CodeLengthSet(_csv_ints(args.lengths, "--lengths"), args.D)
    labels = tuple(args.labels.split(",")) if args.labels else None
    if labels is not None and len(labels) != len(lengths):
        raise ValueError(
            f"{len(labels)} labels for {len(lengths)} lengths"
        )
    code = code_from_lengths(lengths, labels)
    rep = Report("code-from-lengths", argv, inputs)
    rep.field("D", args.D)
    table = []
    for label, word in code.assignments.items():
        table.append(
            {"label": label, "codeword": _digits_str(word.digits), "length": word.length}
        )
        rep.row(f"{label} {_digits_str(word.digits)} {word.length}")
    rep.result["code"] = table
    rep.field("kraft_sum", kraft_sum(code.length_set()))
    return rep


def cmd_entropy(args, argv, inputs):
    pmf = parse_pmf(inputs.read(args.pmf), args.pmf)
    rep = Report("entropy", argv, inputs)
    rep.field("symbols", len(pmf))
    rep.field("base", args.base)
    rep.field("entropy", shannon_entropy(pmf, base=args.base))
    return rep


def cmd_graph_entropy(args, argv, inputs):
    rep_name = "graph-entropy"
    if args.digraph:
        if args.tsallis is not None or args.coloring is not None:
            raise ValueError("--tsallis and --coloring apply to undirected graphs only")
        dg = parse_digraph(inputs.read(args.graph), args.graph)
        in_pmf, out_pmf = in_out_degree_pmfs(dg)
        rep = Report(rep_name, argv, inputs)
        rep.field("vertices", len(dg.vertices))
        rep.field("arcs", len(dg.arcs))
        for name, pmf in (("in", in_pmf), ("out", out_pmf)):
            table = []
            for label, p in pmf.entries:
                table.append({"vertex": label, "probability": p})
                rep.row(f"{name}_pmf {label} {fmt(p)}")
            rep.result[f"{name}_pmf"] = table
            rep.field(f"{name}_entropy", shannon_entropy(pmf))
        return rep

    g = parse_graph(inputs.read(args.graph), args.graph)
    coloring = None
    if args.coloring is not None:
        coloring = parse_coloring(inputs.read(args.coloring), args.coloring)
    rep = Report(rep_name, argv, inputs)
    rep.field("vertices", len(g.vertices))
    rep.field("edges", len(g.edges))
    pmf = degree_pmf(g)
    table = []
    for label, p in pmf.entries:
        table.append({"vertex": label, "probability": p})
        rep.row(f"pmf {label} {fmt(p)}")
    rep.result["degree_pmf"] = table
    rep.field("entropy_bits", graph_entropy(g))
    k = is_regular(g)
    rep.result["regular_degree"] = k
    rep.row(f"regular_degree {'none' if k is None else k}")
    rep.field("max_entropy_bits", math.log2(len(g.vertices)))
    if args.tsallis is not None:
        rep.field("tsallis_q", args.tsallis)
        rep.field("tsallis_entropy", tsallis_graph_entropy(g, args.tsallis))
    if coloring is not None:
        rep.field("conditional_entropy_bits", conditional_graph_entropy(g, coloring))
        rep.field("mutual_information_bits", graph_mutual_information(g, coloring))
    return rep


def cmd_kl(args, argv, inputs):
    g1 = parse_graph(inputs.read(args.graph), args.graph)
    g2 = parse_graph(inputs.read(args.graph2), args.graph2)
    correspondence = None
    if args.map is not None:
        correspondence = parse_vertex_map(inputs.read(args.map), args.map)
    rep = Report("kl", argv, inputs)
    rep.field("vertices", len(g1.vertices))
    rep.field("kl_bits", graph_kl_divergence(g1, g2, correspondence))
    return rep


def cmd_mst(args, argv, inputs):
    g = parse_weighted_graph(inputs.read(args.graph), args.graph)
    mst = minimum_spanning_tree(g)
    rep = Report("mst", argv, inputs)
    rep.field("vertices", len(g.vertices))
    rep.field("input_edges", len(g.edges))
    table = []
    for u, v, w in mst.edges:
        table.append({"u": u, "v": v, "weight": w})
        rep.row(f"edge {u} {v} {fmt(w)}")
    rep.result["edges"] = table
    rep.field("total_weight", mst.total_weight())
    return rep


def cmd_span_entropy(args, argv, inputs):
    g = parse_weighted_graph(inputs.read(args.graph), args.graph)
    rep = Report("span-entropy", argv, inputs)
    rep.field("vertices", len(g.vertices))
    if args.msts_only:
        lo, hi = mst_entropy_extrema(g)
        rep.field("scope", "minimum-weight-spanning-trees")
        rep.field("min_entropy_bits", lo)
        rep.field("max_entropy_bits", hi)
    else:
        lo, hi, t_lo, t_hi = spanning_tree_entropy_extrema(g.graph())
        rep.field("scope", "all-spanning-trees")
        rep.field("min_entropy_bits", lo)
        rep.field("max_entropy_bits", hi)
        rep.result["argmin_edges"] = [{"u": u, "v": v} for u, v in t_lo.edges]
        rep.result["argmax_edges"] = [{"u": u, "v": v} for u, v in t_hi.edges]
        rep.row("argmin " + " ".join(f"{u}-{v}" for u, v in t_lo.edges))
        rep.row("argmax " + " ".join(f"{u}-{v}" for u, v in t_hi.edges))
    return rep


def cmd_assign_leaders(args, argv, inputs):
    pmf = parse_pmf(inputs.read(args.pmf), args.pmf)
    assignment = assign_leaders(pmf, args.D)
    report = verify_secure(assignment)
    rep = Report("assign-leaders", argv, inputs)
    rep.field("D", args.D)
    table = []
    for label, p in pmf.entries:
        path = assignment.leaders[label]
        table.append(
            {
                "label": label,
                "path": _digits_str(path),
                "depth": len(path),
                "probability": p,
            }
        )
        rep.row(f"{label} {_digits_str(path)} {len(path)} {fmt(p)}")
    rep.result["leaders"] = table
    rep.field("expected_depth", assignment.expected_depth())
    rep.field("entropy_bound", shannon_entropy(pmf, base=float(args.D)))
    rep.field("kraft_sum", assignment.depth_kraft_sum())
    rep.field("tree_depth", assignment.tree.max_depth)
    rep.field("tree_nodes", assignment.tree.total_nodes())
    if args.D > 2:
        rep.row(
            "# note: node counts use the geometric series "
            "(D^(depth+1)-1)/(D-1); the binary shortcut D^(depth+1)-1 "
            "applies only at D=2"
        )
    rep.field("secure", report.secure)
    return rep


def cmd_plan_multicast(args, argv, inputs):
    g = parse_weighted_graph(inputs.read(args.graph), args.graph)
    pmf = parse_pmf(inputs.read(args.pmf), args.pmf)
    plan = plan_multicast(g, args.root, pmf, args.D, relax=args.relax)
    rep = Report("plan-multicast", argv, inputs)
    rep.field("root", plan.root)
    rep.field("D", plan.arity)
    rep.field("mst_weight", plan.mst_weight)
    rep.field("expected_depth", plan.expected_depth)
    rep.field("kraft_sum", plan.kraft_sum())
    rep.field("secure", plan.security.secure)
    rep.field("relaxed", plan.relaxed)
    table = []
    for label in sorted(plan.leader_digits, key=str):
        digits = _digits_str(plan.leader_digits[label])
        route = plan.leader_route[label]
        table.append(
            {
                "label": label,
                "path": digits,
                "vertex": plan.leader_vertex[label],
                "route": list(route),
            }
        )
        rep.row(f"{label} {digits} {'->'.join(str(v) for v in route)}")
    rep.result["leaders"] = table
    if args.audit:
        audit = plan_cost_audit(plan, g)
        minimal = audit.mst_weight_minimal
        rep.result["audit_mst_weight_minimal"] = minimal
        rep.row(
            "audit_mst_weight_minimal "
            + ("skipped" if minimal is None else ("true" if minimal else "false"))
        )
        rep.field("audit_prefix_free", audit.prefix_free)
        rep.field("audit_routes_follow_tree", audit.routes_follow_tree)
        rep.field("audit_ok", audit.ok)
    return rep


def cmd_reliability(args, argv, inputs):
    rep = Report("reliability", argv, inputs)
    rep.field("q", args.q)
    rep.field("depth", args.depth)
    rep.field("path_reliability", path_reliability(args.q, args.depth))
    rep.field(
        "last_link_failure", last_link_failure_probability(args.q, args.depth)
    )
    return rep


def cmd_levels(args, argv, inputs):
    g = parse_graph(inputs.read(args.graph), args.graph)
    net = assign_levels(g, args.bs)
    rep = Report("levels", argv, inputs)
    rep.field("base_station", args.bs)
    table = []
    for v in g.vertices:
        table.append({"vertex": v, "level": net.level[v]})
        rep.row(f"{v} {net.level[v]}")
    rep.result["levels"] = table
    rep.field("max_level", net.max_level())
    return rep


def cmd_sectors(args, argv, inputs):
    positions = parse_positions(inputs.read(args.positions), args.positions)
    sectors = assign_sectors(positions, args.bs, args.K)
    rep = Report("sectors", argv, inputs)
    rep.field("base_station", args.bs)
    rep.field("K", args.K)
    table = []
    for v in positions:  # file order
        table.append({"vertex": v, "sector": sectors[v]})
        rep.row(f"{v} {sectors[v]}")
    rep.result["sectors"] = table
    return rep


def cmd_gossip(args, argv, inputs):
    g = parse_graph(inputs.read(args.graph), args.graph)
    net = assign_levels(g, args.bs)
    cfg = GossipConfig(
        level_probabilities=_csv_floats(args.levels_probs, "--levels-probs"),
        q=args.q,
        trials=args.trials,
        seed=args.seed,
        allow_nonmonotone=args.allow_nonmonotone,
    )
    if args.source is not None:
        source = args.source
    else:
        # deepest vertex, smallest id on ties: the farthest sensor reports
        deepest = max(net.level.values())
        source = min(
            (v for v in g.vertices if net.level[v] == deepest), key=_vkey
        )
    rep = Report("gossip", argv, inputs, seed=cfg.seed)
    rep.field("base_station", args.bs)
    rep.field("source", source)
    rep.field("source_level", net.level[source])
    rep.field("levels_probs", ",".join(fmt(p) for p in cfg.level_probabilities))
    rep.field("q", cfg.q)
    rep.field("trials", cfg.trials)
    if cfg.allow_nonmonotone:
        rep.field("allow_nonmonotone", True)
    if args.trial_log:
        log = []
        delivered = total_tx = total_hops = 0
        for t, (ok, tx, hops) in enumerate(trial_outcomes(net, cfg, source)):
            log.append(
                {"trial": t, "delivered": ok, "transmissions": tx, "hops": hops}
            )
            rep.row(f"trial {t} {'1' if ok else '0'} {tx} {hops if ok else '-'}")
            total_tx += tx
            if ok:
                delivered += 1
                total_hops += hops
        rep.result["trial_log"] = log
        res_delivered, res_ratio = delivered, delivered / cfg.trials
        res_tx = total_tx / cfg.trials
        res_hops = total_hops / delivered if delivered else 0.0
    else:
        result = simulate_gossip(net, cfg, source)
        res_delivered, res_ratio = result.delivered, result.delivery_ratio
        res_tx, res_hops = result.mean_transmissions, result.mean_hops
    rep.field("delivered", res_delivered)
    rep.field("delivery_ratio", res_ratio)
    rep.field("mean_transmissions", res_tx)
    rep.field("mean_hops", res_hops)
    return rep


def cmd_fuse(args, argv, inputs):
    intervals = parse_intervals(inputs.read(args.intervals), args.intervals)
    s = IntervalSet(intervals, args.f)
    rep = Report("fuse", argv, inputs)
    rep.field("n", s.n)
    rep.field("f", s.f)
    rep.field("quorum", s.quorum)
    which = args.function
    if which == "m":
        _interval_fields(rep, "m", m_function(s))
    elif which == "n":
        _interval_fields(rep, "n", n_function(s))
    elif which == "s":
        _interval_fields(rep, "s", s_function(s))
    elif which == "omega":
        omega = overlap_function(s)
        table = []
        for x, c in zip(omega.breakpoints, omega.at_points):
            table.append({"breakpoint": x, "count": c})
            rep.row(f"{fmt(x)} {c}")
        rep.result["omega"] = table
        rep.result["between"] = list(omega.between)
    else:
        cmp_ = fusion_compare(s)
        _interval_fields(rep, "m", cmp_.m_result)
        _interval_fields(rep, "n", cmp_.n_result)
        _interval_fields(rep, "s", cmp_.s_result)
        rep.field("m_equals_n", cmp_.m_equals_n)
        if cmp_.m_within_s is not None:
            rep.field("m_within_s", cmp_.m_within_s)
    return rep


# ------------------------------------------------------------------ wiring


def build_parser() -> _Parser:
    parser = _Parser(
        prog="prefixcast",
        description="Prefix-free hierarchies, graph entropy, multicast "
        "planning, gossip simulation, and interval fusion.",
    )
    parser.add_argument("--version", action="version", version=f"prefixcast {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name, handler, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("kraft", cmd_kraft, "Kraft sum and feasibility of a length set")
    p.add_argument("--D", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--lengths", help="comma-separated codeword lengths")
    p.add_argument("--lengths-file", help="file with one length per line ('-' = stdin)")
    p.add_argument("--consecutive", metavar="N1,M", help="closed form for consecutive lengths")
    p.add_argument("--progression", metavar="N1,STEP,M", help="closed form for an arithmetic progression")
    p.add_argument("--check-at", type=int, metavar="D2", help="also check feasibility at a larger alphabet")

    p = add("huffman", cmd_huffman, "optimal D-ary prefix code for a pmf")
    p.add_argument("--D", type=int, default=2)
    p.add_argument("--pmf", required=True, help="pmf file: 'label probability' lines")

    p = add("code-from-lengths", cmd_code_from_lengths, "canonical prefix code from lengths")
    p.add_argument("--D", type=int, default=2)
    p.add_argument("--lengths", help="comma-separated lengths")
    p.add_argument("--lengths-file", help="file with one length per line")
    p.add_argument("--labels", help="comma-separated labels (default 0,1,...)")

    p = add("entropy", cmd_entropy, "Shannon entropy of a pmf")
    p.add_argument("--pmf", required=True)
    p.add_argument("--base", type=float, default=2.0)

    p = add("graph-entropy", cmd_graph_entropy, "degree-distribution entropy of a graph")
    p.add_argument("--graph", required=True, help="edge list ('u v' lines)")
    p.add_argument("--tsallis", type=float, metavar="Q", help="also report Tsallis entropy at q=Q")
    p.add_argument("--coloring", help="coloring file for conditional entropy and mutual information")
    p.add_argument("--digraph", action="store_true", help="treat edges as arcs; report in/out pmfs")

    p = add("kl", cmd_kl, "KL divergence between two graphs' degree pmfs")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph2", required=True)
    p.add_argument("--map", help="vertex correspondence file ('from to' lines; default identity)")

    p = add("mst", cmd_mst, "minimum spanning tree of a weighted graph")
    p.add_argument("--graph", required=True, help="edge list ('u v w' lines; bare 'u v' = weight 1)")

    p = add("span-entropy", cmd_span_entropy, "entropy extrema over spanning trees")
    p.add_argument("--graph", required=True)
    p.add_argument("--msts-only", action="store_true", help="restrict to minimum-weight spanning trees")

    p = add("assign-leaders", cmd_assign_leaders, "prefix-free leader placement from importances")
    p.add_argument("--pmf", required=True)
    p.add_argument("--D", type=int, default=2)

    p = add("plan-multicast", cmd_plan_multicast, "doubly optimal multicast plan on a weighted graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--root", required=True)
    p.add_argument("--pmf", required=True)
    p.add_argument("--D", type=int, default=2)
    p.add_argument("--relax", action="store_true", help="retry with longer codewords when the tree is too narrow (heuristic)")
    p.add_argument("--audit", action="store_true", help="re-verify the plan against the graph")

    p = add("reliability", cmd_reliability, "root-to-leader path reliability at depth n")
    p.add_argument("--q", type=float, required=True, help="per-link failure probability")
    p.add_argument("--depth", type=int, required=True, help="leader depth (number of links)")

    p = add("levels", cmd_levels, "BFS hop levels from the base station")
    p.add_argument("--graph", required=True)
    p.add_argument("--bs", required=True, help="base station vertex")

    p = add("sectors", cmd_sectors, "equiangular sector ids around the base station")
    p.add_argument("--positions", required=True, help="positions file ('vertex x y' lines)")
    p.add_argument("--bs", required=True)
    p.add_argument("--K", type=int, required=True, help="number of sectors")

    p = add("gossip", cmd_gossip, "seeded simulation of level-controlled gossip")
    p.add_argument("--graph", required=True)
    p.add_argument("--bs", required=True)
    p.add_argument("--levels-probs", required=True, metavar="P1,P2,...", help="forwarding probability per level")
    p.add_argument("--q", type=float, default=0.0, help="per-link failure probability")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--source", help="event vertex (default: deepest level, smallest id)")
    p.add_argument("--allow-nonmonotone", action="store_true", help="permit non-decreasing level probabilities")
    p.add_argument("--trial-log", action="store_true", help="emit one line per trial")

    p = add("fuse", cmd_fuse, "fault-tolerant interval fusion")
    p.add_argument("--intervals", required=True, help="intervals file ('lo hi' lines)")
    p.add_argument("--f", type=int, required=True, help="fault bound")
    p.add_argument(
        "--function",
        choices=("m", "omega", "n", "s", "compare"),
        default="compare",
    )

    return parser


def run(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    inputs = Inputs()
    try:
        rep = args.handler(args, argv, inputs)
    except (ValueError, KeyError) as err:
        msg = str(err) if str(err) else err.__class__.__name__
        print(f"prefixcast {args.command}: {msg}", file=sys.stderr)
        return VALIDATION_EXIT
    print(rep.render(args.json))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
