"""Command-line surface: scenario runner, weight trainer, interactive mode.

Exit codes: 0 success, 1 validation/usage problems (bad flags, malformed
or out-of-range files), 2 runtime failures (diverged training, broken
state files, I/O errors).  ``EEGS_CONFIG`` names a default config file.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from typing import Sequence

from .affect import TrainingDataset, make_planted_dataset, rmse, sgd_train
from .core import EMOTION_NAMES, PersonalityProfile
from .engine import Engine, EngineConfig, write_trace_csv, write_trace_json
from .errors import EegsError, ValidationError
from .regulation import Strategy
from .scenario import Scenario, build_engine, load_scenario, run_scenario

CONFIG_ENV = "EEGS_CONFIG"

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; flag misuse is a validation problem here.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eegs", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--config", default=os.environ.get(CONFIG_ENV),
                        help="engine config JSON (default: $EEGS_CONFIG or built-ins)")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario file and write its trace")
    run.add_argument("--scenario", required=True)
    run.add_argument("--out", help="trace path; .json gets the structured form, "
                                   "anything else comma-separated rows")
    _add_engine_overrides(run)

    train = sub.add_parser("train", help="fit link weights from a dataset file")
    train.add_argument("--dataset", required=True)
    train.add_argument("--out-model", required=True)
    train.add_argument("--eta0", type=float, default=0.05)
    train.add_argument("--eta-decay", type=float, default=1e-4)
    train.add_argument("--epochs", type=int, default=40)
    train.add_argument("--seed", type=int, default=0)
    train.add_argument("--holdout", type=float, default=0.2,
                       help="held-out fraction for the reported error")
    train.add_argument("--dense", action="store_true",
                       help="train every emotion-variable pair, ignoring the "
                            "stock association topology")
    train.add_argument("--backend", choices=("auto", "numba", "numpy"), default="auto")

    synth = sub.add_parser("synth", help="generate a planted synthetic dataset")
    synth.add_argument("--out", required=True)
    synth.add_argument("--samples", type=int, default=5000)
    synth.add_argument("--variables", type=int, default=7)
    synth.add_argument("--seed", type=int, default=0)

    repl = sub.add_parser("repl", help="interactive event entry")
    repl.add_argument("--out", help="write the session trace here on quit")
    repl.add_argument("--personality", default=None,
                      help="five comma-separated traits O,C,E,A,N in [0,1]")
    _add_engine_overrides(repl)

    return parser


def _add_engine_overrides(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--strategy", choices=[s.value for s in Strategy])
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--seed", type=int, default=0,
                        help="accepted for interface uniformity; the pipeline "
                             "itself is deterministic")


def _load_config(args: argparse.Namespace) -> EngineConfig:
    config = EngineConfig.load(args.config) if args.config else EngineConfig()
    overrides = {}
    if getattr(args, "strategy", None):
        overrides["strategy"] = Strategy(args.strategy)
    if getattr(args, "alpha", None) is not None:
        overrides["alpha"] = args.alpha
    if getattr(args, "beta", None) is not None:
        overrides["beta"] = args.beta
    return dataclasses.replace(config, **overrides) if overrides else config


def _write_trace(engine: Engine, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if path.endswith(".json"):
            write_trace_json(engine.trace, fh)
        else:
            write_trace_csv(engine.trace, fh)


def _print_summary(engine: Engine) -> None:
    events = [e for e in engine.trace if e.kind == "event"]
    if events and events[-1].outcome and events[-1].outcome.emotion:
        outcome = events[-1].outcome
        label = outcome.emotion
        if outcome.contributor:
            label += f" (dominant: {outcome.contributor})"
        print(f"final state: {label} @ {outcome.intensity:.4f} "
              f"[{outcome.strategy.value}]")
    else:
        print("final state: no active emotion")
    print(f"mood: {engine.mood:+.4f}  tick: {engine.clock}")


def cmd_run(args: argparse.Namespace) -> int:
    config = _load_config(args)
    scenario = load_scenario(args.scenario)
    engine = build_engine(config, scenario)
    run_scenario(engine, scenario)
    if args.out:
        _write_trace(engine, args.out)
    _print_summary(engine)
    return EXIT_OK


def cmd_train(args: argparse.Namespace) -> int:
    dataset = TrainingDataset.load(args.dataset)
    if args.holdout > 0:
        train_set, holdout = dataset.split(args.holdout, seed=args.seed)
    else:
        train_set, holdout = dataset, None
    links = None
    if not args.dense and set(dataset.emotions) == set(EMOTION_NAMES):
        from .affect import VARIABLE_NAMES, association_topology
        if set(dataset.variables) == set(VARIABLE_NAMES):
            links = association_topology()
    result = sgd_train(train_set, eta0=args.eta0, eta_decay=args.eta_decay,
                       epochs=args.epochs, seed=args.seed, links=links,
                       backend=args.backend)
    result.model.save(args.out_model)
    print(f"trained {len(result.model.links)} links on {len(train_set)} samples "
          f"({args.epochs} epochs)")
    print(f"train rmse: {rmse(result.model, train_set, backend=args.backend):.6f}")
    if holdout is not None:
        print(f"held-out rmse: {rmse(result.model, holdout, backend=args.backend):.6f}")
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    dataset, _truth = make_planted_dataset(args.samples, n_variables=args.variables,
                                           seed=args.seed)
    dataset.save(args.out)
    print(f"wrote {len(dataset)} samples "
          f"({len(dataset.variables)} variables x {len(dataset.emotions)} emotions)")
    return EXIT_OK


REPL_USAGE = """commands:
  event <source> <action> <target>   process one event at the current tick
  tick [n]                           advance the clock (default 1)
  state                              show intensities and mood
  memory                             show goals, standards, attitudes
  save <path> | load <path>          snapshot the agent state
  quit                               leave (writes --out trace if given)"""


def _parse_personality(text: str | None) -> PersonalityProfile:
    if text is None:
        return PersonalityProfile()
    parts = text.split(",")
    if len(parts) != 5:
        raise ValidationError("--personality needs five comma-separated traits")
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise ValidationError(f"--personality: {exc}") from exc
    return PersonalityProfile(*values)


def _repl_show_state(engine: Engine) -> None:
    for name in engine.emotions:
        intensity = engine.affect.intensities[name]
        marker = " *" if intensity > 0 else ""
        print(f"  {name:<13} {intensity:.4f}{marker}")
    print(f"  mood {engine.mood:+.4f}  tick {engine.clock}")


def _repl_show_memory(engine: Engine) -> None:
    memory = engine.memory
    goals = list(memory.goals.scorable())
    print(f"  goals ({len(goals)}):")
    for node, height in goals:
        print(f"    ({node.name}, {node.target}) degree {node.degree:+.2f} h={height}")
    print(f"  standards ({len(memory.standards)}):")
    for entry in sorted(memory.standards.values(), key=lambda s: s.key):
        print(f"    ({entry.action_or_emotion}, {entry.source}, {entry.target}) "
              f"{entry.preference.value} {entry.approval_degree:.3f}")
    print(f"  attitudes ({len(memory.entities)}):")
    for attitude in memory.attitudes():
        profile = memory.profile(attitude.entity)
        print(f"    {attitude.entity}: perception {attitude.perception:+.3f} "
              f"familiarity {profile.familiarity:.3f}")
    print(f"  history: {len(memory.history)} events")


def _repl_event(engine: Engine, parts: list[str]) -> None:
    if len(parts) != 3:
        print("usage: event <source> <action> <target>")
        return
    entry = engine.process_event(*parts)
    if entry.kind == "error":
        print(f"rejected: {entry.error}")
        return
    a = entry.appraisals
    print(f"  d_e {entry.degree:+.3f}  desi {a.desirability:+.4f}  "
          f"prai {a.praiseworthiness:+.4f}  appe {a.appealingness:+.4f}")
    print(f"  dese {a.deservingness:+.4f}  fami {a.familiarity:.4f}  "
          f"unex {a.unexpectedness:.4f}")
    active = {n: i for n, i in entry.intensities.items() if i > 0}
    listing = ", ".join(f"{n} {i:.3f}" for n, i in
                        sorted(active.items(), key=lambda kv: -kv[1]))
    print(f"  active: {listing or 'none'}")
    outcome = entry.outcome
    if outcome and outcome.emotion:
        print(f"  regulated: {outcome.emotion} @ {outcome.intensity:.4f} "
              f"[{outcome.strategy.value}]")
    else:
        print("  regulated: no active emotion")


def cmd_repl(args: argparse.Namespace, stdin=None) -> int:
    config = _load_config(args)
    engine = Engine.from_config(config, _parse_personality(args.personality))
    stream = stdin if stdin is not None else sys.stdin
    if stream is sys.stdin and sys.stdin.isatty():
        print(REPL_USAGE)
    for line in stream:
        parts = line.split()
        if not parts:
            continue
        command, rest = parts[0], parts[1:]
        if command == "quit":
            break
        elif command == "event":
            _repl_event(engine, rest)
        elif command == "tick":
            try:
                count = int(rest[0]) if rest else 1
            except ValueError:
                print("usage: tick [n]")
                continue
            for _ in range(max(0, count)):
                engine.tick()
            print(f"  tick {engine.clock}")
        elif command == "state":
            _repl_show_state(engine)
        elif command == "memory":
            _repl_show_memory(engine)
        elif command in ("save", "load") and rest:
            try:
                if command == "save":
                    engine.save_state(rest[0])
                else:
                    engine.load_state(rest[0])
                print(f"  {command}d {rest[0]}")
            except (EegsError, OSError) as exc:  # keep the session alive
                print(f"  {command} failed: {exc}")
        else:
            print(REPL_USAGE)
    if args.out:
        _write_trace(engine, args.out)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"run": cmd_run, "train": cmd_train, "synth": cmd_synth,
                "repl": cmd_repl}
    try:
        return handlers[args.command](args)
    except ValidationError as exc:
        print(f"eegs: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (EegsError, OSError) as exc:
        print(f"eegs: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
