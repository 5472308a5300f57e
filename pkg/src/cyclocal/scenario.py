"""Scenario files: flat, sectioned, diff-friendly fixtures.

A scenario declares a ring, an action, optional declarations about the
invariant ring, and a list of verification tasks.  Polynomials appear as
canonical text.  Example:

    [ring]
    characteristic = 2
    variables = x, y
    prime = x, y

    [action]
    p = 2
    sigma.y = y + x

    [declarations]
    residue_iso = true
    invariant_gens = x ; y^2 + x*y
    parameters = y ; x

    [tasks]
    validate
    principality expect y
    decompose y^2 expect y^2 + x*y | x

Unknown sections, keys, or task names are rejected with the line number.  A
task's optional trailing `expect <text>` pins its result string (witnesses
joined by " | ").  The [ring] and [action] sections may be omitted for
scenarios whose tasks are ring-independent (counting tasks, universal tower
checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .action import CyclicAction
from .errors import ScenarioParseError
from .poly import Field, Poly, Ring

TASK_NAMES = {
    "validate": 0,
    "augmentation-ideal": 0,
    "principality": 0,
    "generator-independence": 0,
    "tower-verify": (0, 1),
    "decompose": 1,
    "min-poly": 1,
    "pseudo-reflection": 0,
    "invariant-parameters": 1,
    "free-rank": 1,
    "lemma3-universal": 1,
    "lambda-table": 2,
    "p3-inequalities": 1,
    "calculus": 1,
    "descent-roundtrip": 1,
}

_RING_KEYS = {"characteristic", "coefficients", "variables", "prime", "order"}
_DECL_KEYS = {"residue_iso", "invariant_gens", "parameters", "seed"}
_SECTIONS = ("ring", "action", "declarations", "tasks")


@dataclass(frozen=True)
class Task:
    name: str
    args: tuple[str, ...]
    expect: str | None
    line: int

    @property
    def label(self) -> str:
        return " ".join((self.name,) + self.args)


@dataclass(frozen=True)
class Declarations:
    residue_iso: bool | None = None
    invariant_gens: tuple[Poly, ...] = ()
    parameters: tuple[Poly, ...] | None = None
    seed: int | None = None


@dataclass(frozen=True)
class Scenario:
    name: str
    ring: Ring | None
    action: CyclicAction | None
    declarations: Declarations
    tasks: tuple[Task, ...]


def _split_list(value: str, sep: str) -> list[str]:
    return [part.strip() for part in value.split(sep) if part.strip()]


def parse_scenario_text(text: str, name: str) -> Scenario:
    sections: dict[str, list[tuple[int, str]]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in _SECTIONS:
                raise ScenarioParseError(f"unknown section [{current}]", lineno)
            if current in sections:
                raise ScenarioParseError(f"duplicate section [{current}]", lineno)
            sections[current] = []
            continue
        if current is None:
            raise ScenarioParseError("content before any [section]", lineno)
        sections[current].append((lineno, line))

    ring = _build_ring(sections.get("ring")) if "ring" in sections else None
    act = None
    if "action" in sections:
        if ring is None:
            first = sections["action"][0][0] if sections["action"] else 0
            raise ScenarioParseError("[action] requires a [ring] section", first)
        act = _build_action(ring, sections["action"])
    decls = _build_declarations(ring, sections.get("declarations", []))
    if "tasks" not in sections:
        raise ScenarioParseError("missing [tasks] section", None)
    tasks = tuple(_build_task(entry) for entry in sections["tasks"])
    return Scenario(name, ring, act, decls, tasks)


def parse_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    return parse_scenario_text(path.read_text(), path.stem)


def _keyvals(entries: list[tuple[int, str]], allowed: set[str] | None,
             prefix_ok: str | None = None) -> dict[str, tuple[int, str]]:
    out: dict[str, tuple[int, str]] = {}
    for lineno, line in entries:
        if "=" not in line:
            raise ScenarioParseError(f"expected key = value, got {line!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        known = (allowed is not None and key in allowed) or \
                (prefix_ok is not None and key.startswith(prefix_ok))
        if not known:
            raise ScenarioParseError(f"unknown key {key!r}", lineno)
        if key in out:
            raise ScenarioParseError(f"duplicate key {key!r}", lineno)
        out[key] = (lineno, value)
    return out


def _build_ring(entries: list[tuple[int, str]]) -> Ring:
    kv = _keyvals(entries, _RING_KEYS)
    first_line = entries[0][0] if entries else None
    for required in ("characteristic", "variables"):
        if required not in kv:
            raise ScenarioParseError(f"[ring] is missing {required!r}", first_line)
    lineno, char_txt = kv["characteristic"]
    try:
        characteristic = int(char_txt)
    except ValueError:
        raise ScenarioParseError(f"characteristic must be an integer, got {char_txt!r}", lineno)
    kind = kv.get("coefficients", (lineno, ""))[1]
    if not kind:
        kind = "prime" if characteristic > 0 else "rationals"
    try:
        if kind == "prime":
            fld = Field.prime(characteristic)
        elif kind == "rationals":
            if characteristic != 0:
                raise ValueError("rationals need characteristic 0")
            fld = Field.rationals()
        elif kind == "integers":
            if characteristic != 0:
                raise ValueError("integers need characteristic 0")
            fld = Field.integers()
        else:
            raise ValueError(f"unknown coefficient domain {kind!r}")
    except ValueError as exc:
        raise ScenarioParseError(str(exc), kv.get("coefficients", kv["characteristic"])[0])
    variables = tuple(_split_list(kv["variables"][1], ","))
    prime = tuple(_split_list(kv["prime"][1], ",")) if "prime" in kv else variables
    order = kv.get("order", (0, "grevlex"))[1]
    try:
        return Ring(fld, variables, order=order, prime_vars=prime)
    except ValueError as exc:
        raise ScenarioParseError(str(exc), first_line)


def _build_action(ring: Ring, entries: list[tuple[int, str]]) -> CyclicAction:
    kv = _keyvals(entries, {"p"}, prefix_ok="sigma.")
    if "p" not in kv:
        first_line = entries[0][0] if entries else None
        raise ScenarioParseError("[action] is missing 'p'", first_line)
    lineno, p_txt = kv.pop("p")
    try:
        p = int(p_txt)
    except ValueError:
        raise ScenarioParseError(f"p must be an integer, got {p_txt!r}", lineno)
    images = {}
    for key, (lineno, value) in kv.items():
        var = key[len("sigma."):]
        if var not in ring.variables:
            raise ScenarioParseError(f"sigma image for unknown variable {var!r}", lineno)
        try:
            images[var] = ring.parse(value)
        except ValueError as exc:
            raise ScenarioParseError(str(exc), lineno)
    try:
        return CyclicAction(ring, p, images)
    except Exception as exc:
        first_line = entries[0][0] if entries else None
        raise ScenarioParseError(str(exc), first_line)


def _parse_poly_list(ring: Ring | None, value: str, lineno: int) -> tuple[Poly, ...]:
    if ring is None:
        raise ScenarioParseError("polynomial declarations need a [ring] section", lineno)
    out = []
    for txt in _split_list(value, ";"):
        try:
            out.append(ring.parse(txt))
        except ValueError as exc:
            raise ScenarioParseError(str(exc), lineno)
    return tuple(out)


def _build_declarations(ring: Ring | None, entries: list[tuple[int, str]]) -> Declarations:
    kv = _keyvals(entries, _DECL_KEYS)
    residue_iso = None
    if "residue_iso" in kv:
        lineno, value = kv["residue_iso"]
        if value not in ("true", "false"):
            raise ScenarioParseError(f"residue_iso must be true or false, got {value!r}", lineno)
        residue_iso = value == "true"
    invariant_gens: tuple[Poly, ...] = ()
    if "invariant_gens" in kv:
        invariant_gens = _parse_poly_list(ring, kv["invariant_gens"][1], kv["invariant_gens"][0])
    parameters = None
    if "parameters" in kv:
        parameters = _parse_poly_list(ring, kv["parameters"][1], kv["parameters"][0])
    seed = None
    if "seed" in kv:
        lineno, value = kv["seed"]
        try:
            seed = int(value)
        except ValueError:
            raise ScenarioParseError(f"seed must be an integer, got {value!r}", lineno)
    return Declarations(residue_iso, invariant_gens, parameters, seed)


def _build_task(entry: tuple[int, str]) -> Task:
    lineno, line = entry
    expect = None
    if " expect " in line:
        line, expect = line.split(" expect ", 1)
        expect = expect.strip()
    elif line.endswith(" expect"):
        raise ScenarioParseError("empty expectation", lineno)
    parts = line.split()
    name, args = parts[0], tuple(parts[1:])
    if name not in TASK_NAMES:
        raise ScenarioParseError(f"unknown task {name!r}", lineno)
    arity = TASK_NAMES[name]
    if isinstance(arity, tuple):
        if len(args) not in arity:
            raise ScenarioParseError(
                f"task {name!r} takes {' or '.join(map(str, arity))} arguments", lineno)
    elif len(args) != arity:
        raise ScenarioParseError(f"task {name!r} takes {arity} argument(s)", lineno)
    return Task(name, args, expect, lineno)
