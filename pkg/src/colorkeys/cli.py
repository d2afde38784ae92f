"""Command-line entry points: train, simulate, serve."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import lm
from .errors import ColorkeysError, DivergenceError
from .metrics import build_capacity_curve, channel_capacity
from .session import SessionConfig
from .simulate import simulate_corpus

MODEL_ENV_VAR = "COLORKEYS_MODEL"


def _session_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threshold", type=float, default=0.95,
                        help="selection threshold (default 0.95)")
    parser.add_argument("--strategy", choices=("greedy", "huffman", "hybrid"),
                        default="greedy", help="color assignment strategy")
    parser.add_argument("--alpha0", type=float, default=9.0,
                        help="initial correct-click pseudocount")
    parser.add_argument("--beta0", type=float, default=1.0,
                        help="initial incorrect-click pseudocount")
    parser.add_argument("--min-clicks", type=int, default=1,
                        help="clicks required before a selection may fire")


def _model_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", default=os.environ.get(MODEL_ENV_VAR),
                        help=f"model file (default: ${MODEL_ENV_VAR})")


def _require_model(args) -> "lm.CharNgramModel":
    if not args.model:
        raise ColorkeysError(
            f"no model given: pass --model or set ${MODEL_ENV_VAR}")
    return lm.CharNgramModel.load(args.model)


def _session_config(model, args) -> SessionConfig:
    return SessionConfig(
        lm=model,
        threshold=args.threshold,
        strategy=args.strategy,
        alpha0=args.alpha0,
        beta0=args.beta0,
        min_clicks=args.min_clicks,
    )


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.strip() for line in f if line.strip()]


def cmd_train(args) -> int:
    corpus = _read_lines(args.corpus)
    alphabet = lm.Alphabet(args.alphabet) if args.alphabet else None
    model = lm.train(corpus, order=args.order, alphabet=alphabet)
    model.save(args.out)
    print(f"trained order-{model.order} model on {model.lines} lines "
          f"({model.tokens} characters)")
    print(f"alphabet: {model.alphabet.symbols!r}")
    print(f"model written to {args.out}")
    if args.validation:
        ce = model.corpus_cross_entropy(_read_lines(args.validation))
        print(f"held-out cross-entropy: {ce:.4f} bits/char")
    return 0


def _write_results(out_base: str, rows: list[dict], payload: dict) -> None:
    json_path = Path(f"{out_base}.json")
    csv_path = Path(f"{out_base}.csv")
    json_path.parent.mkdir(parents=True, exist_ok=True)
    json_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                         encoding="utf-8")
    with open(csv_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(
            f, fieldnames=["f", "seed", "texts", "chars", "clicks", "cpc",
                           "undos", "info_rate"])
        writer.writeheader()
        writer.writerows(rows)
    print(f"results written to {json_path} and {csv_path}")


def cmd_simulate(args) -> int:
    model = _require_model(args)
    texts = _read_lines(args.test)
    config = _session_config(model, args)
    seeds = [args.seed_base + i for i in range(args.seeds)]

    if args.sweep:
        f_values = [float(x) for x in args.sweep.split(",")]
        curve = build_capacity_curve(config, texts, f_values=f_values, seeds=seeds)
        out_base = args.out or "capacity_curve"
        Path(f"{out_base}.json").write_text(curve.to_json() + "\n", encoding="utf-8")
        with open(f"{out_base}.csv", "w", newline="", encoding="utf-8") as f:
            curve.write_csv(f)
        for pt in curve.points:
            print(f"f={pt.f:<5} capacity={pt.capacity:.4f} "
                  f"rate={pt.rate_mean:.4f} (stddev {pt.rate_stddev:.4f})")
        print(f"curve written to {out_base}.json and {out_base}.csv")
        return 0

    f = args.error_rate
    ce = model.corpus_cross_entropy(texts)
    baseline = None
    if f > 0:
        baseline = simulate_corpus(config, texts, f=0.0, seed=seeds[0])

    rows = []
    aggregates = []
    try:
        for seed in seeds:
            agg = simulate_corpus(config, texts, f=f, seed=seed)
            aggregates.append(agg)
            rate = (baseline.total_clicks / agg.total_clicks) if baseline else 1.0
            rows.append({
                "f": f, "seed": seed, "texts": agg.texts,
                "chars": agg.total_chars, "clicks": agg.total_clicks,
                "cpc": agg.mean_cpc, "undos": agg.undo_selections,
                "info_rate": rate,
            })
    except DivergenceError as exc:
        print(f"simulation diverged: {exc}", file=sys.stderr)
        if args.out and rows:
            _write_results(args.out, rows, {"diverged": True, "completed_rows": rows})
            print("partial results flagged as diverged", file=sys.stderr)
        return 1

    mean_cpc = sum(r["cpc"] for r in rows) / len(rows)
    print(f"mean cpc: {mean_cpc:.4f} over {len(texts)} texts, "
          f"{len(seeds)} seed(s)")
    print(f"model cross-entropy: {ce:.4f} bits/char (lower bound on cpc)")
    if f > 0:
        mean_rate = sum(r["info_rate"] for r in rows) / len(rows)
        print(f"information rate: {mean_rate:.4f} vs channel capacity "
              f"{channel_capacity(f):.4f} at f={f}")
    if args.out:
        payload = {
            "f": f, "cross_entropy": ce, "mean_cpc": mean_cpc,
            "rows": rows,
            "per_seed": [agg.to_dict() for agg in aggregates],
        }
        _write_results(args.out, rows, payload)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    model = _require_model(args)
    session_kwargs = dict(
        threshold=args.threshold, strategy=args.strategy,
        alpha0=args.alpha0, beta0=args.beta0, min_clicks=args.min_clicks,
    )
    host, _, port = args.listen.rpartition(":")
    app = create_app(model, session_kwargs=session_kwargs,
                     assets_dir=args.assets,
                     include_belief=not args.no_belief)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorkeys",
        description="Two-button Bayesian text entry: train models, run "
                    "simulations, serve the typing UI.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a character n-gram model")
    p_train.add_argument("--corpus", required=True, help="training text, one sentence per line")
    p_train.add_argument("--order", type=int, default=8, help="n-gram order (default 8)")
    p_train.add_argument("--out", required=True, help="model output path (.gz supported)")
    p_train.add_argument("--validation", help="held-out text for a cross-entropy report")
    p_train.add_argument("--alphabet", help="override the default 28-symbol alphabet")
    p_train.set_defaults(func=cmd_train)

    p_sim = sub.add_parser("simulate", help="replay text through simulated sessions")
    _model_flag(p_sim)
    p_sim.add_argument("--test", required=True, help="target text, one sentence per line")
    p_sim.add_argument("--error-rate", type=float, default=0.0,
                       help="click error probability f (default 0)")
    p_sim.add_argument("--sweep", help="comma-separated f values (must include 0); "
                                       "emits a capacity curve instead")
    p_sim.add_argument("--seeds", type=int, default=1, help="number of seeds")
    p_sim.add_argument("--seed-base", type=int, default=0, help="first seed value")
    p_sim.add_argument("--out", help="basename for .json/.csv result files")
    _session_flags(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_serve = sub.add_parser("serve", help="run the WebSocket session service")
    _model_flag(p_serve)
    p_serve.add_argument("--listen", default="127.0.0.1:8765",
                         help="host:port to bind (default 127.0.0.1:8765)")
    p_serve.add_argument("--assets", help="directory of built UI assets to serve")
    p_serve.add_argument("--no-belief", action="store_true",
                         help="omit the belief map from STATE messages")
    _session_flags(p_serve)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except ColorkeysError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
