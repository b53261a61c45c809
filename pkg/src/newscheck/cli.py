"""Operator command line.

    newscheck train --corpus news.jsonl --language de --kind kernel --out de.kernel.json
    newscheck eval --corpus news.jsonl --model de.kernel.json --model de.ngram.json
    newscheck check --registry registry/ --text "..."        (or --file, --url)
    newscheck serve --config service.json
    newscheck stats --corpus news.jsonl
    newscheck coefficients --model de.linear.json --top-k 10

Exit codes: 0 ok, 1 usage, 2 data error, 3 runtime error. With --json the
only stdout output is a single JSON document; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import load_corpus
from .errors import DataError, NewsCheckError
from .features import load_catalog, load_glossary, model_input_names
from .metrics import auroc, confusion, cross_validate, length_stats, mcc, weighted_f1
from .models import (
    KernelModel,
    LinearModel,
    NgramScorer,
    TrainConfig,
    coefficient_report,
    load_model,
    save_model,
    score_document,
    score_kernel,
    score_linear,
    train_ngram_scorer,
)
from .pipeline import check
from .registry import Registry, packaged_data_root
from .service import NewsCheckService, load_config, serve_forever
from .training import (
    featurize,
    kernel_trainer,
    linear_trainer,
    ngram_trainer,
    train_language_models,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3

DEFAULT_SEED = 13


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems must exit 1, not argparse's 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="newscheck", description="propaganda news checking toolkit")
    parser.add_argument("--registry", default=None, help="registry directory (profiles/catalogs/glossaries/models)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="train a model from a corpus file")
    train.add_argument("--corpus", required=True)
    train.add_argument("--language", required=True)
    train.add_argument("--kind", required=True, choices=["linear", "kernel", "ngram"])
    train.add_argument("--out", required=True)
    train.add_argument("--cv", type=int, default=0, metavar="FOLDS", help="also report k-fold cross-validation")
    train.add_argument("--epochs", type=int, default=TrainConfig.epochs)
    train.add_argument("--learning-rate", type=float, default=TrainConfig.learning_rate)
    train.add_argument("--regularization", type=float, default=TrainConfig.regularization)

    evaluate = sub.add_parser("eval", help="evaluate model files on a labeled corpus")
    evaluate.add_argument("--corpus", required=True)
    evaluate.add_argument("--model", action="append", required=True, help="model file; repeatable")

    chk = sub.add_parser("check", help="run the full pipeline on one text")
    source = chk.add_mutually_exclusive_group(required=True)
    source.add_argument("--text")
    source.add_argument("--file")
    source.add_argument("--url")
    chk.add_argument("--top-k", type=int, default=10)

    serve = sub.add_parser("serve", help="run the HTTP analysis service")
    serve.add_argument("--config", default=None, help="JSON config file (env vars override)")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    serve.add_argument("--log", default=None)
    serve.add_argument("--static", default=None, help="directory for the web UI static files")

    stats = sub.add_parser("stats", help="corpus length statistics")
    stats.add_argument("--corpus", required=True)

    coeff = sub.add_parser("coefficients", help="stance indicator table of a linear model")
    coeff.add_argument("--model", required=True)
    coeff.add_argument("--top-k", type=int, default=10)

    return parser


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(human)


def _language_data(args, language: str):
    """Catalog and glossary for a language, from --registry or packaged data."""
    root = Path(args.registry) if args.registry else packaged_data_root()
    catalog = load_catalog(root / "catalogs" / f"{language}.json")
    glossary = load_glossary(root / "glossaries" / f"{language}.json")
    return catalog, glossary


def _cmd_train(args) -> int:
    records = [r for r in load_corpus(args.corpus) if r.language == args.language]
    if not records:
        raise DataError(f"corpus has no records for language {args.language!r}")
    cfg = TrainConfig(
        epochs=args.epochs,
        learning_rate=args.learning_rate,
        regularization=args.regularization,
        seed=args.seed,
        folds=max(args.cv, 2),
    )
    payload: dict = {"language": args.language, "kind": args.kind, "out": args.out}
    report = None
    if args.kind == "ngram":
        dataset = [(r.text, r.label) for r in records]
        if args.cv:
            report = cross_validate(dataset, ngram_trainer(cfg, args.language), folds=args.cv, seed=args.seed)
        model = train_ngram_scorer(dataset, cfg, language=args.language)
    else:
        catalog, glossary = _language_data(args, args.language)
        rows = featurize(records, catalog, glossary)
        trainer = kernel_trainer(cfg) if args.kind == "kernel" else linear_trainer(cfg)
        if args.cv:
            report = cross_validate(rows, trainer, folds=args.cv, seed=args.seed)
        model = train_language_models(records, args.language, cfg, catalog, glossary)[args.kind]
    save_model(model, args.out)
    if report is not None:
        payload["cross_validation"] = report.as_dict()
    human = f"trained {args.kind} model for {args.language} -> {args.out}"
    if report is not None:
        human += "\n" + report.table()
    _emit(args, payload, human)
    return EXIT_OK


def _score_rows(model, records, args):
    """(gold, predicted) pairs plus (gold, score) pairs for one model."""
    if isinstance(model, NgramScorer):
        outputs = [score_document(model, r.text) for r in records]
    else:
        catalog, glossary = _language_data(args, records[0].language)
        names = model_input_names(catalog, glossary)
        if isinstance(model, LinearModel) and list(model.feature_names) != names:
            raise DataError("linear model feature names disagree with the catalog/glossary")
        rows = featurize(records, catalog, glossary)
        score = score_kernel if isinstance(model, KernelModel) else score_linear
        outputs = [score(model, x) for x, _ in rows]
    pairs = [(r.label, out[0]) for r, out in zip(records, outputs)]
    scored = [(r.label, out[1]) for r, out in zip(records, outputs)]
    return pairs, scored


def _cmd_eval(args) -> int:
    records = load_corpus(args.corpus)
    results = []
    lines = ["model                          f1      mcc     auroc"]
    for path in args.model:
        model = load_model(path)
        scoped = [r for r in records if model.language in ("multi", r.language)]
        if not scoped:
            raise DataError(f"corpus has no records for model language {model.language!r}")
        pairs, scored = _score_rows(model, scoped, args)
        f1 = weighted_f1(pairs)
        m = mcc(confusion(pairs))
        try:
            a = auroc(scored)
        except NewsCheckError:
            a = float("nan")
        results.append({"model": str(path), "f1": f1, "mcc": m, "auroc": a, "n": len(scoped)})
        lines.append(f"{Path(path).name:<30} {f1:<7.4f} {m:<7.4f} {a:<7.4f}")
    _emit(args, {"corpus": args.corpus, "results": results}, "\n".join(lines))
    return EXIT_OK


def _cmd_check(args) -> int:
    if not args.registry:
        raise UsageError("check requires --registry pointing at a directory with trained models")
    registry = Registry.load(args.registry)
    if args.text is not None:
        text = args.text
    elif args.file is not None:
        text = Path(args.file).read_text(encoding="utf-8")
    else:
        from .service import extract_article, fetch_url

        html = fetch_url(args.url, timeout=10.0, max_bytes=1 << 20)
        text = extract_article(html)
    result = check(text, registry, top_k=args.top_k)
    verdict = result.verdict
    lines = [
        f"language: {result.language} (supported={result.supported}, translated={result.translated})",
        f"verdict:  {verdict.label}  probability {verdict.probability:.3f}",
        f"models:   scorer={verdict.neural_label} ({verdict.neural_prob:.3f})  svm={verdict.svm_label}"
        + ("  [arbitrated]" if verdict.arbitration_applied else "")
        + ("  [flipped]" if verdict.flipped else ""),
    ]
    if result.explanation.indicators:
        lines.append("indicators:")
        for ind in result.explanation.indicators:
            lines.append(f"  {ind.feature:<18} {ind.stance:<11} weight {ind.weight:+.3f}"
                         f"  doc {ind.doc_value:.4f}  contribution {ind.contribution:+.5f}")
    else:
        lines.append("indicators: none")
    if result.explanation.keywords:
        lines.append("keywords: " + ", ".join(f"{k} x{c}" for k, c in result.explanation.keywords))
    _emit(args, result.as_dict(), "\n".join(lines))
    return EXIT_OK


def _cmd_serve(args) -> int:
    config = load_config(args.config)
    if args.registry:
        config.registry_dir = args.registry
    if args.host:
        config.host = args.host
    if args.port is not None:
        config.port = args.port
    if args.log:
        config.log_path = args.log
    if args.static:
        config.static_dir = args.static
    service = NewsCheckService(config)
    print(f"serving on http://{config.host}:{config.port} "
          f"(languages: {', '.join(service.registry.languages())})", file=sys.stderr)
    serve_forever(service)
    return EXIT_OK


def _cmd_stats(args) -> int:
    records = load_corpus(args.corpus)
    stats = length_stats([r.text for r in records])
    human = (
        f"texts:  {stats.count}\n"
        f"mean:   {stats.mean:.1f} word tokens\n"
        f"min/q1/median/q3/max: {stats.min:.0f} / {stats.q1:.1f} / {stats.median:.1f} / "
        f"{stats.q3:.1f} / {stats.max:.0f}"
    )
    _emit(args, stats.as_dict(), human)
    return EXIT_OK


def _cmd_coefficients(args) -> int:
    model = load_model(args.model)
    if not isinstance(model, LinearModel):
        raise DataError(f"{args.model} is not a linear model")
    rows = coefficient_report(model, args.top_k)
    lines = ["feature                        weight    stance"]
    for name, weight, stance in rows:
        lines.append(f"{name:<30} {weight:+.4f}   {stance}")
    payload = {
        "model": args.model,
        "coefficients": [{"feature": n, "weight": w, "stance": s} for n, w, s in rows],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


_COMMANDS = {
    "train": _cmd_train,
    "eval": _cmd_eval,
    "check": _cmd_check,
    "serve": _cmd_serve,
    "stats": _cmd_stats,
    "coefficients": _cmd_coefficients,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"data-error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NewsCheckError as exc:
        print(f"runtime-error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except KeyboardInterrupt:
        return EXIT_OK
    except OSError as exc:
        print(f"runtime-error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
