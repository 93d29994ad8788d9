"""Plan synthesis for teams of agents under MITL specifications.

Models, runs and automata are plain dicts in the same JSON shapes the
command-line tool reads and writes. Times are rational strings such as "5/2".
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Optional, Union

from . import _core
from ._core import FormulaError, InputError, InternalError, UnsupportedFragmentError

__all__ = [
    "FormulaError",
    "InputError",
    "InternalError",
    "UnsupportedFragmentError",
    "accepts",
    "check",
    "in_fragment",
    "load_model",
    "normalize",
    "plan",
    "satisfies",
    "simulate",
    "timeline_svg",
    "trace_csv",
    "translate",
]

Model = Union[str, "os.PathLike[str]", Mapping[str, Any]]


def load_model(path: Union[str, "os.PathLike[str]"]) -> dict:
    """Reads a model file; // and /* */ comments are allowed."""
    with open(path, encoding="utf-8") as f:
        return json.loads(_core.strip_comments(f.read()))


def _model_args(model: Model) -> tuple:
    if isinstance(model, Mapping):
        return json.dumps(model), os.getcwd()
    path = os.fspath(model)
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return text, os.path.dirname(os.path.abspath(path))


def _runs_text(runs: Any) -> str:
    if runs is None:
        return ""
    if isinstance(runs, (str, os.PathLike)):
        with open(runs, encoding="utf-8") as f:
            return f.read()
    return json.dumps(runs)


def plan(
    model: Model,
    formulas: Optional[Mapping[str, str]] = None,
    state_budget: int = _core.default_state_budget,
    scale: bool = True,
) -> dict:
    """Synthesizes one run per agent.

    `formulas` overrides specifications by agent name; the key "team"
    overrides the team formula. Returns the plan.json document: "status" is
    "SUCCESS", "UNSATISFIABLE" or "EXPLORATION_LIMIT".
    """
    text, base = _model_args(model)
    return json.loads(_core.plan(text, base, dict(formulas or {}), state_budget, scale))


def check(model: Model, runs: Any = None, formulas: Optional[Mapping[str, str]] = None) -> dict:
    """Evaluates formulas on runs (default: the model's "runs" field).

    Given `formulas`, only those are checked; otherwise the model's own.
    Returns {"verdicts", "all_hold", "collective"}.
    """
    text, base = _model_args(model)
    return json.loads(_core.check(text, base, _runs_text(runs), dict(formulas or {}), formulas is not None))


def simulate(model: Model, runs: Any = None) -> dict:
    """Merges runs into the collective run, one entry per event."""
    text, base = _model_args(model)
    return json.loads(_core.simulate(text, base, _runs_text(runs)))


def translate(formula: str) -> dict:
    """Timed Buchi automaton for a formula in the supported fragment."""
    return json.loads(_core.translate(formula))


def normalize(formula: str) -> str:
    """Fully bracketed form of a formula, with explicit intervals."""
    return _core.normalize(formula)


def in_fragment(formula: str) -> bool:
    return _core.in_fragment(formula)


def satisfies(formula: str, word: Mapping[str, Any]) -> dict:
    """Evaluates a formula on a lasso timed word.

    `word` is {"prefix": [{"atoms": [...], "time": "0"}, ...], "cycle": [...],
    "period": "2"}. Returns {"holds", and when false "violation_position",
    "violation_time"}.
    """
    return _core.satisfies(formula, json.dumps(word))


def accepts(automaton: Mapping[str, Any], word: Mapping[str, Any]) -> bool:
    """Membership of a lasso timed word in a timed Buchi automaton."""
    return _core.accepts(json.dumps(automaton), json.dumps(word))


def trace_csv(collective: Mapping[str, Any]) -> str:
    return _core.trace_csv(json.dumps(collective))


def timeline_svg(collective: Mapping[str, Any]) -> str:
    return _core.timeline_svg(json.dumps(collective))
