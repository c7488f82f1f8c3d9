"""
命令行入口

    python -m turan <command> [options]

子命令: lagrangian / families list|emit / classify / shift / symmetrize / score / verify-all
退出码: 0 通过, 1 校验失败, 2 用法或输入错误
结果写 stdout (表格 / CSV / JSON)，日志写 stderr
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .core.config import settings
from .core.decorators import EXIT_FAIL, EXIT_OK, EXIT_USAGE, safe_command
from .core.logger import logger, set_level
from .core.report import dumps_canonical, first_failure, render_table, result_digest, suites_table
from .core.utils import stopwatch
from .modules.classify import census_frame, enumerate_maximal_intersecting, verify_pair_cover_classification
from .modules.families import build_turan_t53, catalog_table, get_entry
from .modules.hypergraph import Hypergraph, read_hypergraph, serialize, to_json
from .modules.lagrangian import default_options, evaluate_named, maximize
from .modules.shifting import ShiftTrace, is_antichain, shift, verify_unique_intersection
from .modules.symmetrize import (
    audit_properties,
    edge_goodness,
    find_bad_vertices,
    local_search_partition,
    symmetrize,
)
from .modules.symmetrize.scoring import PARTS
from .modules.verify import VerifyPlan, run_verify_all

# (结果, 是否通过, 人类可读文本)
Outcome = Tuple[Dict[str, Any], bool, str]

LAGRANGIAN_MODES = ("auto", "multistart", "symmetric", "exhaustive")
SHIFT_POLICIES = ("deterministic", "all")
# 位置参数可以是文件的子命令
FILE_COMMANDS = ("lagrangian", "shift", "symmetrize", "score")
FILE_SUFFIXES = (".json", ".txt", ".hg")


@dataclass
class RunManifest:
    command: str
    parameters: Dict[str, Any]
    seed: int
    version: str = settings.VERSION
    wall_time: Optional[float] = None
    digest: str = ""

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "version": self.version,
            "digest": self.digest,
        }
        # 墙钟时间只在 --timing 时输出，保证确定性模式下报告逐字节相同
        if self.wall_time is not None:
            payload["wall_time"] = round(self.wall_time, 3)
        return payload


def _read_file(path: str) -> Hypergraph:
    if not Path(path).is_file():
        raise ValueError(f"no such hypergraph file: {path}")
    return read_hypergraph(path)


def _positional_file(args: argparse.Namespace) -> None:
    """位置参数是已存在的文件或带超图文件扩展名时，按 --file 处理"""
    name = getattr(args, "name", None)
    if args.command not in FILE_COMMANDS or not name or getattr(args, "file", None):
        return
    path = Path(name)
    if path.suffix.lower() in FILE_SUFFIXES or path.is_file():
        args.file, args.name = name, None


def _load_graph(args: argparse.Namespace) -> Tuple[Hypergraph, str]:
    """--file / --turan / 目录名 三选一"""
    if getattr(args, "file", None):
        return _read_file(args.file), str(args.file)
    if getattr(args, "turan", None) is not None:
        return build_turan_t53(args.turan), f"T53({args.turan})"
    name = getattr(args, "name", None)
    if not name:
        raise ValueError("an input is required: a catalog name, --file or --turan")
    family = get_entry(name).build(getattr(args, "n", None))
    if not isinstance(family, Hypergraph):
        raise ValueError(f"'{name}' is a set family, not a hypergraph")
    return family, name


def _parse_partition(text: str, n: int) -> List[List[int]]:
    """
    两种写法：
        '1,2|3,4|5|6|7'   按部分列出顶点，空部分写作空串
        '0,0,1,1,2,3,4'   逐顶点给出所在部分的下标 (0..4)，长度为 n
    """
    try:
        if "|" in text:
            return [[int(v) for v in chunk.split(",") if v.strip()] for chunk in text.split("|")]
        labels = [int(v) for v in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}, expected e.g. '1,2|3|4|5|6' or '0,0,1,2,3,4'") from None
    if len(labels) != n:
        raise ValueError(f"partition labels give {len(labels)} vertices, the graph has {n}")
    if any(not 0 <= p < PARTS for p in labels):
        raise ValueError(f"part labels must lie in 0..{PARTS - 1}")
    return [[v for v, p in enumerate(labels, start=1) if p == k] for k in range(PARTS)]


def _policy(text: str) -> str:
    return "deterministic" if text == "det" else text


# -----------------------------------------------------------------------------
# 子命令
# -----------------------------------------------------------------------------
def cmd_lagrangian(args: argparse.Namespace) -> Outcome:
    overrides: Dict[str, Any] = {"seed": args.seed}
    if args.restarts is not None:
        overrides["restarts"] = args.restarts
    mode = "exhaustive" if args.exhaustive else args.mode
    if mode != "auto":
        overrides.update(exhaustive=mode == "exhaustive", symmetric=mode == "symmetric")

    if args.name and not args.file:
        family = get_entry(args.name).build(args.n)
        payload = evaluate_named(args.name, args.n, default_options(family, **overrides))
        passed = payload["certified"] and payload.get("matches_expected", True)
    else:
        graph, label = _load_graph(args)
        result = maximize(graph, default_options(graph, **overrides))
        payload = {"name": label, "n": graph.n, **result.to_dict()}
        passed = result.certified

    lines = [f"λ({payload['name']}) = {payload['value']:.12f}"]
    if payload.get("expected") is not None:
        lines.append(f"expected  = {payload['expected']} ({payload['expected_kind']})")
    lines.append(f"support   = {payload['support']}")
    lines.append(f"kkt       = {payload['kkt_residual']:.3e}  certified={payload['certified']}  mode={payload['mode']}")
    return payload, passed, "\n".join(lines)


def cmd_families_list(args: argparse.Namespace) -> Outcome:
    frame = catalog_table()
    return {"families": frame.to_dict(orient="records")}, True, frame.to_string(index=False)


def cmd_families_emit(args: argparse.Namespace) -> Outcome:
    entry = get_entry(args.name)
    family = entry.build(args.n)
    if not isinstance(family, Hypergraph):
        raise ValueError(f"'{args.name}' is a set family and has no hypergraph file form")
    text = json.dumps(to_json(family)) + "\n" if args.format == "json" else serialize(family, comment=entry.name)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"{entry.name} 已写入 {args.out}")
    return {"name": entry.name, "n": family.n, "r": family.r, "edges": family.m}, True, text.rstrip("\n")


def cmd_classify(args: argparse.Namespace) -> Outcome:
    records = enumerate_maximal_intersecting(args.n, opt_in=args.opt_in, seed=args.seed, jobs=args.jobs)
    suite = verify_pair_cover_classification(args.n, records=records)
    shown = [r for r in records if r.covers_pairs] if args.cover_pairs else records
    frame = census_frame(shown, extended=args.extended)
    if args.csv:
        frame.to_csv(args.csv, index=False)
        logger.info(f"普查结果已写入 {args.csv} ({len(shown)} 行)")
    payload = {"n": args.n, "records": [r.to_row() for r in shown], "checks": suite}
    return payload, suite["passed"], frame.to_csv(index=False).rstrip("\n")


def _trace_ok(trace: ShiftTrace) -> bool:
    return verify_unique_intersection(trace.final) and is_antichain(trace.final)


def _members(family: Any) -> str:
    return " ".join("".join(map(str, m)) for m in family.members)


def _trace_lines(index: int, trace: ShiftTrace, states: List[Any]) -> List[str]:
    lines = [f"trace {index}: {_members(trace.initial)}"]
    for k, ((member, i), state) in enumerate(zip(trace.steps, states[1:]), start=1):
        lines.append(f"  {k:>3}  {''.join(map(str, member))} − {i}  →  {_members(state)}")
    return lines


def cmd_shift(args: argparse.Namespace) -> Outcome:
    if args.file:
        family, label = _read_file(args.file), str(args.file)
    elif args.name:
        family, label = get_entry(args.name).build(args.n), args.name
    else:
        raise ValueError("an input is required: a catalog name or a file")
    outcome = shift(family, args.policy)
    traces: List[ShiftTrace] = outcome if isinstance(outcome, list) else [outcome]
    # replay 对每一步重新检查合法性与相交性
    states = [t.replay() for t in traces]
    passed = all(_trace_ok(t) for t in traces)
    payload = {"name": label, "policy": args.policy, "traces": [t.to_dict() for t in traces]}
    if args.trace:
        for entry, replayed in zip(payload["traces"], states):
            entry["states"] = [[list(m) for m in s.members] for s in replayed]
    rows = [
        {"final": _members(t.final), "steps": len(t.steps), "type": d["type"]}
        for t, d in zip(traces, payload["traces"])
    ]
    text = render_table(rows)
    if args.trace:
        steps = [line for k, (t, s) in enumerate(zip(traces, states)) for line in _trace_lines(k, t, s)]
        text = "\n".join(steps + [text])
    return payload, passed, text


def cmd_symmetrize(args: argparse.Namespace) -> Outcome:
    graph, label = _load_graph(args)
    log = symmetrize(graph, alpha=args.alpha, random_order=args.random_order, seed=args.seed)
    payload: Dict[str, Any] = {"input": label, **log.to_dict()}
    passed = True
    if args.audit:
        report = audit_properties(log)
        payload["audit"] = report.to_dict()
        passed = report.passed
    if args.json_log:
        Path(args.json_log).write_text(dumps_canonical(log.to_dict(with_edges=True), indent=2) + "\n", encoding="utf-8")
        logger.info(f"对称化日志已写入 {args.json_log}")
    final = log.final
    text = render_table(payload["trajectory"]) + (
        f"\nfinal |V|={len(final.vertices)} |U|={len(final.parts)} e={final.graph.m} ratio={log.ratio:.4f}"
    )
    if args.audit:
        text += f"\naudit: {'PASS' if passed else 'FAIL'} ({len(payload['audit']['checks'])} checks)"
    return payload, passed, text


def cmd_score(args: argparse.Namespace) -> Outcome:
    graph, label = _load_graph(args)
    parts = _parse_partition(args.partition, graph.n)
    if args.local_search:
        _, score = local_search_partition(graph, parts)
    else:
        score = edge_goodness(graph, parts)
    bad = find_bad_vertices(graph, score.parts, args.bad_threshold)
    payload = {"input": label, **score.to_dict(), "bad_vertices": sorted(bad), "threshold": args.bad_threshold}
    text = render_table([{k: v for k, v in payload.items() if k not in ("parts", "input")}])
    return payload, score.identity_holds, text


def cmd_verify_all(args: argparse.Namespace) -> Outcome:
    plan = VerifyPlan(seed=args.seed, jobs=args.jobs, quick=args.quick)
    suites = run_verify_all(plan)
    failure = first_failure(suites)
    if failure is not None:
        logger.error(f"首个失败项: {dumps_canonical(failure)}")
    payload = {"suites": suites, "first_failure": failure}
    return payload, failure is None, suites_table(suites)


# -----------------------------------------------------------------------------
# 参数解析
# -----------------------------------------------------------------------------
def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="所有随机性的种子")
    common.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS, help="并行 worker 上限")
    common.add_argument("--json", action="store_true", help="输出 JSON 报告")
    common.add_argument("--timing", action="store_true", help="报告中包含墙钟时间")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="DEBUG 日志")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="只输出 WARNING 及以上")
    return common


def _inputs(parser: argparse.ArgumentParser, with_name: bool = True) -> None:
    if with_name:
        parser.add_argument("name", nargs="?", help="目录中的族名或超图文件")
        parser.add_argument("--n", type=int, default=None, help="参数化族的参数")
    parser.add_argument("--file", help="超图文件 (.json 或文本格式)")
    parser.add_argument("--turan", type=int, default=None, metavar="N", help="使用 T₅³(N)")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="turan", description="超图 Lagrangian 与 Turán 密度工具")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("lagrangian", parents=[common], help="计算 λ")
    _inputs(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--mode", choices=LAGRANGIAN_MODES, default="auto")
    mode.add_argument("--exhaustive", action="store_true", help="等同 --mode exhaustive (n ≤ 7)")
    p.add_argument("--restarts", type=int, default=None)
    p.set_defaults(handler=cmd_lagrangian)

    p = sub.add_parser("families", help="族目录")
    fam = p.add_subparsers(dest="action", metavar="action")
    fam.required = True
    q = fam.add_parser("list", parents=[common], help="列出目录")
    q.set_defaults(handler=cmd_families_list)
    q = fam.add_parser("emit", parents=[common], help="以超图文件格式输出一个族")
    q.add_argument("name")
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out", help="写入文件而不是 stdout")
    q.set_defaults(handler=cmd_families_emit)

    p = sub.add_parser("classify", parents=[common], help="极大相交 3-族普查")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cover-pairs", action="store_true", help="只输出覆盖全部点对的记录")
    p.add_argument("--csv", help="CSV 输出路径")
    p.add_argument("--extended", action="store_true", help="CSV 附带全部字段")
    p.add_argument("--opt-in", action="store_true", help=f"允许 n = {settings.CENSUS_OPT_IN_N}")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("shift", parents=[common], help="对相交族做 shift")
    p.add_argument("name", nargs="?", help="目录中的族名或族文件")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--file")
    p.add_argument("--policy", type=_policy, choices=SHIFT_POLICIES, default="deterministic",
                   metavar="det|all", help="det (deterministic) 或 all")
    p.add_argument("--trace", action="store_true", help="逐步输出 shift 过程")
    p.set_defaults(handler=cmd_shift)

    p = sub.add_parser("symmetrize", parents=[common], help="Cleaning + Merging 对称化")
    _inputs(p)
    p.add_argument("--alpha", type=float, default=settings.SYMMETRIZE_ALPHA)
    p.add_argument("--audit", action="store_true", help="审计 P1–P5 与合并性质")
    p.add_argument("--random-order", action="store_true", help="按 seed 随机选择顶点与点对")
    p.add_argument("--json-log", help="完整日志 (含边) 写入路径")
    p.set_defaults(handler=cmd_symmetrize)

    p = sub.add_parser("score", parents=[common], help="5-划分评分")
    _inputs(p)
    p.add_argument("--partition", required=True,
                   help="'1,2|3,4|5|6|7' (按部分列顶点) 或 '0,0,1,1,2,3,4' (逐顶点的部分下标)")
    p.add_argument("--bad-threshold", type=float, default=settings.BAD_VERTEX_THRESHOLD)
    p.add_argument("--local-search", action="store_true", help="先做单顶点局部搜索")
    p.set_defaults(handler=cmd_score)

    p = sub.add_parser("verify-all", parents=[common], help="运行全部校验套件")
    p.add_argument("--quick", action="store_true", help="只跑闭式与 [5]、[6] 普查")
    p.set_defaults(handler=cmd_verify_all)
    return parser


def _parameters(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"handler", "json", "timing", "verbose", "quiet", "seed", "jobs"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _command_name(args: argparse.Namespace) -> str:
    action = getattr(args, "action", None)
    return f"{args.command} {action}" if action else args.command


@safe_command
def _execute(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    with stopwatch() as clock:
        result, passed, text = args.handler(args)
    manifest = RunManifest(
        command=_command_name(args),
        parameters=_parameters(args),
        seed=args.seed,
        digest=result_digest(result),
    )
    if args.timing:
        manifest.wall_time = clock["elapsed"]
    if args.json:
        report = {
            "schema": settings.REPORT_SCHEMA,
            "manifest": manifest.to_dict(),
            "passed": passed,
            "result": result,
        }
        out(dumps_canonical(report, indent=2))
    else:
        out(text)
        if args.timing:
            logger.info(f"{manifest.command}: {manifest.wall_time:.2f}s")
    return EXIT_OK if passed else EXIT_FAIL


def run(argv: Optional[Sequence[str]] = None, out: Callable[[str], None] = print) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: --help / --version → 0，用法错误 → 2
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.verbose:
        set_level("DEBUG")
    elif args.quiet:
        set_level("WARNING")
    _positional_file(args)
    return _execute(args, out)


def main() -> None:
    sys.exit(run())
