"""Command line driving the same code paths as the HTTP service.

Commands: ingest documents into a data directory, query a KB, train a
ranking model from a labeled query file, evaluate a model against labels,
and serve the REST API. Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .features import FeatureExtractor, load_global_idf, load_taxonomy
from .index import build_index
from .kb import KnowledgeBase, QueryContext, parse_kb
from .metrics import evaluate_labels, parse_labels
from .ranker import (
    DEFAULT_NO_ANSWER_THRESHOLD,
    GbdtModel,
    TrainingRow,
    TrainingSet,
    TrainParams,
    feature_gains,
    load_default_model,
    load_model,
    save_model,
    train,
)
from .service import KbStore, ServiceConfig, answer_pipeline, create_app


class DataError(Exception):
    """Bad input data (missing file, malformed labels, unknown KB)."""


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default of 2 is reserved for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_kb(kb_ref: str, data_dir: Path) -> KnowledgeBase:
    """A KB reference is either a kb.json file path or a KB id in data_dir."""
    as_path = Path(kb_ref)
    if as_path.is_file():
        source = as_path
    else:
        source = data_dir / "kbs" / kb_ref / "kb.json"
        if not source.is_file():
            raise DataError(
                f"no KB file at {as_path} and no KB id {kb_ref!r} under {data_dir}"
            )
    try:
        return parse_kb(source.read_text(encoding="utf-8"))
    except ValueError as err:
        raise DataError(f"{source}: {err}") from err


def _load_ranker(model_path: str | None) -> GbdtModel:
    if model_path is None:
        return load_default_model()
    path = Path(model_path)
    if not path.is_file():
        raise DataError(f"model file not found: {path}")
    try:
        return load_model(path)
    except ValueError as err:
        raise DataError(f"{path}: {err}") from err


def _read_labels(path_arg: str):
    path = Path(path_arg)
    if not path.is_file():
        raise DataError(f"label file not found: {path}")
    try:
        return parse_labels(path.read_text(encoding="utf-8"))
    except ValueError as err:
        raise DataError(str(err)) from err


def cmd_ingest(args) -> int:
    store = KbStore(ServiceConfig(data_dir=Path(args.data_dir)))
    from .service import ApiError

    try:
        state, warnings = store.create_kb(
            {
                "name": args.name,
                "persona": args.persona,
                "sourceFiles": args.paths,
            }
        )
    except ApiError as err:
        raise DataError("; ".join([err.message, *err.details])) from err
    if args.json:
        print(
            json.dumps(
                {
                    "kbId": state.kb.kb_id,
                    "qaCount": len(state.kb.qa_pairs),
                    "warnings": warnings,
                }
            )
        )
    else:
        for warning in warnings:
            print(f"warning: {warning}", file=sys.stderr)
        print(state.kb.kb_id)
    return 0


def cmd_query(args) -> int:
    kb = _load_kb(args.kb, Path(args.data_dir))
    if not kb.qa_pairs:
        raise DataError(f"KB {kb.kb_id!r} has no QA pairs")
    model = _load_ranker(args.model)
    ctx = QueryContext()
    if args.context_qa is not None:
        previous = kb.get(args.context_qa)
        if previous is None:
            raise DataError(f"--context-qa {args.context_qa} is not in the KB")
        ctx = QueryContext(previous_qa_id=previous.id, previous_answer=previous.answer)

    from .chitchat import default_corpus

    ranked, kind = answer_pipeline(
        kb,
        build_index(kb),
        model,
        load_taxonomy(),
        load_global_idf(),
        default_corpus(),
        args.question,
        ctx,
        threshold=args.threshold,
    )
    shown = ranked[: args.top if kind == "kb" else 1]
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "qaId": a.qa_id,
                        "score": a.score,
                        "retrievalScore": a.retrieval_score,
                        "kind": kind,
                        "answer": a.answer_text,
                    }
                    for a in shown
                ]
            )
        )
        return 0
    print(f"{'rank':<5} {'score':<7} {'qaId':<6} answer")
    for position, a in enumerate(shown, start=1):
        qa_id = "-" if a.qa_id is None else a.qa_id
        answer = a.answer_text if len(a.answer_text) <= 80 else a.answer_text[:77] + "..."
        print(f"{position:<5} {a.score:<7.3f} {qa_id:<6} {answer}")
    if kind != "kb":
        print(f"({kind})")
    return 0


def _featurize_labels(kb: KnowledgeBase, rows) -> TrainingSet:
    index = build_index(kb)
    taxonomy = load_taxonomy()
    global_idf = load_global_idf()
    by_id = {qa.id: qa for qa in kb.qa_pairs}
    for row in rows:
        if row.qa_id not in by_id:
            raise DataError(f"line {row.line}: qaId {row.qa_id} is not in the KB")
    training_rows = []
    by_query: dict[str, list] = {}
    for row in rows:
        by_query.setdefault(row.query, []).append(row)
    for query_id, (query, group) in enumerate(sorted(by_query.items())):
        extractor = FeatureExtractor(kb, index, taxonomy, global_idf, query, QueryContext())
        for row in group:
            training_rows.append(
                TrainingRow(
                    features=extractor.featurize(by_id[row.qa_id]),
                    label=row.label,
                    query_id=query_id,
                )
            )
    return TrainingSet(rows=tuple(training_rows))


def cmd_train(args) -> int:
    kb = _load_kb(args.kb, Path(args.data_dir))
    rows = _read_labels(args.labels)
    data = _featurize_labels(kb, rows)
    params = TrainParams(seed=args.seed)
    try:
        model = train(data, params)
    except ValueError as err:
        raise DataError(str(err)) from err
    save_model(model, args.out)
    gains = feature_gains(model)
    report = {
        "rows": len(data.rows),
        "trees": len(model.trees),
        "stoppedEarly": model.metadata.get("stoppedEarly"),
        "validationLoss": model.metadata.get("validationLoss"),
        "topFeatures": dict(list(gains.items())[:5]),
        "modelPath": str(args.out),
    }
    if args.json:
        print(json.dumps(report))
    else:
        print(f"trained {report['trees']} trees on {report['rows']} rows")
        print(f"validation loss {report['validationLoss']:.4f}"
              f"{' (stopped early)' if report['stoppedEarly'] else ''}")
        print("top features: " + ", ".join(f"{k}={v:.1f}" for k, v in report["topFeatures"].items()))
        print(f"saved {report['modelPath']}")
    return 0


def cmd_eval(args) -> int:
    kb = _load_kb(args.kb, Path(args.data_dir))
    rows = _read_labels(args.labels)
    model = _load_ranker(args.model)
    try:
        report = evaluate_labels(kb, model, rows, threshold=args.threshold)
    except ValueError as err:
        raise DataError(str(err)) from err
    if args.json:
        print(json.dumps(report.to_dict(verbose=args.verbose)))
        return 0
    print(f"AUC {report.auc:.4f}")
    print(f"F1 (top answer) {report.f1:.4f}")
    print(f"queries {report.queries}  rows {report.rows}  threshold {report.threshold}")
    if args.verbose:
        for o in report.outcomes:
            verdict = "ok" if (o.answered and o.top_relevant) else (
                "abstained" if not o.answered else "wrong"
            )
            top = "-" if o.top_qa_id is None else o.top_qa_id
            print(f"  [{verdict:<9}] top={top:<4} score={o.top_score:.3f}  {o.query}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    config = ServiceConfig(
        data_dir=Path(args.data_dir),
        no_answer_threshold=args.threshold,
        model_path=Path(args.model) if args.model else None,
        max_top=args.max_top,
        active_learning=not args.no_active_learning,
    )
    app = create_app(config)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="faqkb", description=__doc__.splitlines()[0])
    parser.add_argument("--data-dir", default="faqkb-data", help="KB storage directory")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="extract documents into a new KB")
    p.add_argument("paths", nargs="+", help="source documents (.md, .html, .txt)")
    p.add_argument("--name", required=True, help="KB display name")
    p.add_argument("--persona", default="none", help="chit-chat persona")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("query", help="ask a question against a KB")
    p.add_argument("kb", help="KB id in the data dir, or a kb.json file")
    p.add_argument("question")
    p.add_argument("--context-qa", type=int, default=None,
                   help="QA id of the previous turn's answer")
    p.add_argument("--top", type=int, default=3)
    p.add_argument("--threshold", type=float, default=DEFAULT_NO_ANSWER_THRESHOLD)
    p.add_argument("--model", default=None, help="ranking model file (default: bundled)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_query)

    p = sub.add_parser("train", help="train a ranking model from labeled queries")
    p.add_argument("labels", help="TSV: query <TAB> qaId <TAB> 0|1")
    p.add_argument("--kb", required=True, help="KB id in the data dir, or a kb.json file")
    p.add_argument("--out", required=True, help="where to write the model JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_train)

    p = sub.add_parser("eval", help="score a model against labeled queries")
    p.add_argument("kb", help="KB id in the data dir, or a kb.json file")
    p.add_argument("labels", help="TSV: query <TAB> qaId <TAB> 0|1")
    p.add_argument("--model", default=None, help="ranking model file (default: bundled)")
    p.add_argument("--threshold", type=float, default=DEFAULT_NO_ANSWER_THRESHOLD)
    p.add_argument("--verbose", action="store_true", help="per-query diagnostics")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--threshold", type=float, default=DEFAULT_NO_ANSWER_THRESHOLD)
    p.add_argument("--model", default=None, help="ranking model file (default: bundled)")
    p.add_argument("--max-top", type=int, default=10)
    p.add_argument("--no-active-learning", action="store_true")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DataError as err:
        print(f"faqkb: {err}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    raise SystemExit(main())
