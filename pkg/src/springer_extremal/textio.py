"""Text and JSON forms shared by the command line.

Partitions are written ``4,2,2``, signs ``4:+,2:-``, rationals ``p/q`` and
shuffle orders as their word, e.g. ``ABA``.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .partitions import MarkedSymplectic, Rat, as_rat, check_partition

SCHEMA_VERSION = 1


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: expected comma-separated integers") from None
    return check_partition(parts)


def render_partition(p) -> str:
    return ",".join(str(x) for x in p)


def parse_rat(text: str) -> Rat:
    try:
        return as_rat(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {text!r}: expected an integer or p/q") from None


def render_rat(x) -> str:
    return str(as_rat(x))


def parse_epsilon(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    text = text.strip()
    if not text:
        return out
    for tok in text.split(","):
        part, sep, sign = tok.strip().partition(":")
        if not sep or sign not in ("+", "-", "+1", "-1", "1"):
            raise ValueError(f"malformed sign entry {tok!r}: expected part:+ or part:-")
        try:
            key = int(part)
        except ValueError:
            raise ValueError(f"malformed sign entry {tok!r}") from None
        if key in out:
            raise ValueError(f"part {key} marked twice")
        out[key] = -1 if sign.startswith("-") else 1
    return out


def render_epsilon(eps) -> str:
    items = eps.items() if isinstance(eps, dict) else eps
    return ",".join(f"{i}:{'+' if e == 1 else '-'}" for i, e in sorted(items, reverse=True))


def parse_marked(text_lambda: str, text_epsilon: str) -> MarkedSymplectic:
    return MarkedSymplectic(parse_partition(text_lambda), parse_epsilon(text_epsilon))


def render_marked(ms: MarkedSymplectic) -> tuple[str, str]:
    return render_partition(ms.lam), render_epsilon(ms.eps)


def parse_order(text: str) -> str:
    text = text.strip()
    if set(text) - {"A", "B"}:
        raise ValueError(f"malformed order {text!r}: expected a word over A and B")
    return text


def json_value(x):
    """Exact JSON form: ints stay ints, other rationals become ``"p/q"`` strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        x = as_rat(x)
        return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [json_value(v) for v in x]
    raise TypeError(f"no JSON form for {x!r}")


def from_json_value(x):
    if isinstance(x, str) and "/" in x:
        return as_rat(Fraction(x))
    if isinstance(x, list):
        return tuple(from_json_value(v) for v in x)
    return x


def marked_to_json(ms: MarkedSymplectic) -> dict:
    return {"lambda": list(ms.lam), "epsilon": {str(i): e for i, e in ms.eps}}


def marked_from_json(obj: dict) -> MarkedSymplectic:
    return MarkedSymplectic(tuple(obj["lambda"]), {int(i): int(e) for i, e in obj["epsilon"].items()})


def report(command: str, inputs: dict, outputs: dict, timings: dict | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": json_value(inputs),
        "outputs": json_value(outputs),
        "timings": json_value(timings or {}),
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))
