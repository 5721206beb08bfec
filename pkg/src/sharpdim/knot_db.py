"""Knot records with per-field invariants, plus JSON storage."""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from sharpdim.dim_engine import FieldInvariants, FieldLabel, Shape, mirror
from sharpdim.laurent import LaurentPoly

log = logging.getLogger(__name__)

DB_ENV = "SHARPDIM_DB"


class DatabaseFormatError(ValueError):
    pass


class UnknownKnotError(KeyError):
    pass


@dataclass
class KnotRecord:
    name: str
    alexander: LaurentPoly
    invariants: list[FieldInvariants] = field(default_factory=list)
    genus: int | None = None
    annotations: dict = field(default_factory=dict)
    mirror_of: str | None = None
    provenance: dict[int, str] = field(default_factory=dict)

    @property
    def field_independent(self) -> bool:
        return bool(self.annotations.get("field_independent"))

    def invariants_for(self, fld: FieldLabel) -> FieldInvariants | None:
        for inv in self.invariants:
            if inv.field == fld:
                return inv
        if self.field_independent and self.invariants:
            inv = self.invariants[0]
            return FieldInvariants(inv.nu, inv.r, inv.shape, fld)
        return None


@dataclass(frozen=True)
class Violation:
    record: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.record}: [{self.rule}] {self.message}"


def validate(record: KnotRecord, db: list[KnotRecord] | None = None) -> list[Violation]:
    out = []

    def add(rule, msg):
        out.append(Violation(record.name, rule, msg))

    for inv in record.invariants:
        for rule, msg in inv.violations():
            add(rule, f"{inv.field}: {msg}")
        if record.genus == 1 and inv.field.characteristic != 2 and abs(inv.nu) > 1:
            add("genus-one bound", f"{inv.field}: |nu|={abs(inv.nu)} > 1 for a genus-one knot")
    if not record.alexander.is_symmetric():
        add("alexander symmetric", f"{record.alexander} is not symmetric")
    if record.alexander(1) not in (1, -1):
        add("alexander at 1", f"value {record.alexander(1)} at t = 1")
    if record.mirror_of and db is not None:
        other = next((k for k in db if k.name == record.mirror_of), None)
        if other is None:
            add("mirror identity", f"mirror {record.mirror_of!r} not in database")
        else:
            if other.alexander != record.alexander:
                add("mirror identity", "mirror has a different Alexander polynomial")
            for inv in record.invariants:
                theirs = other.invariants_for(inv.field)
                if theirs is not None and mirror(theirs) != inv:
                    add("mirror identity", f"{inv.field}: {(inv.nu, inv.r)} is not the mirror of "
                        f"{(theirs.nu, theirs.r)}")
    return out


def lint_db(db: list[KnotRecord]) -> list[Violation]:
    return [v for rec in db for v in validate(rec, db)]


def _inv(char, nu, r, shape):
    return FieldInvariants(nu, r, Shape(shape), FieldLabel(char))


def _twist(n: int) -> KnotRecord:
    # K_n has n half twists; K_1 is the left-handed trefoil, K_2 the figure-eight
    m = (n + 1) // 2
    if n % 2:
        alex, inv, poss = [m, -(2 * m - 1), m], _inv(0, -1, n, "V"), [[n, -1], [n + 1, 0], [n + 2, 1]]
    else:
        m = n // 2
        alex, inv, poss = [-m, 2 * m + 1, -m], _inv(0, 0, n, "?"), [[n - 1, 1], [n, 0], [n + 1, -1]]
    return KnotRecord(f"K{n}", LaurentPoly.symmetric(alex), [inv], genus=1,
                      annotations={"family": "twist", "char_not_2_candidates": poss},
                      provenance={0: "theorem"})


def builtin_db() -> list[KnotRecord]:
    trefoil = LaurentPoly.symmetric([1, -1, 1])
    db = [
        KnotRecord("unknot", LaurentPoly.symmetric([1]), [_inv(0, 0, 0, "W")], genus=0,
                   annotations={"field_independent": True}, provenance={0: "theorem"}),
        KnotRecord("T(2,3)", trefoil, [_inv(0, 1, 1, "V"), _inv(2, 4, 4, "W")], genus=1,
                   annotations={"aliases": ["T23", "right-trefoil"],
                                "known_su2_abelian": ["6", "6+1/n", "6-1/n"]},
                   mirror_of="K1", provenance={0: "theorem", 2: "remark"}),
        KnotRecord("K1", trefoil, [_inv(0, -1, 1, "V"), _inv(2, -4, 4, "W")], genus=1,
                   annotations={"aliases": ["left-trefoil"], "family": "twist"},
                   mirror_of="T(2,3)", provenance={0: "theorem", 2: "remark"}),
        KnotRecord("figure-eight", LaurentPoly.symmetric([-1, 3, -1]), [_inv(0, 0, 2, "W")],
                   genus=1, annotations={"aliases": ["fig8", "K2", "4_1"], "family": "twist",
                                         "char_not_2_candidates": [[1, 1], [2, 0], [3, -1]]},
                   mirror_of="figure-eight", provenance={0: "theorem"}),
        *(_twist(n) for n in range(3, 7)),
        KnotRecord("T(2,5)", LaurentPoly.symmetric([1, -1, 1, -1, 1]), [_inv(0, 3, 3, "V")],
                   genus=2, annotations={"aliases": ["T25"]}, provenance={0: "theorem"}),
    ]
    return db


def lookup(db: list[KnotRecord], name: str) -> KnotRecord:
    for rec in db:
        if rec.name == name or name in rec.annotations.get("aliases", []):
            return rec
    raise UnknownKnotError(name)


def record_to_json(rec: KnotRecord) -> dict:
    out: dict = {"name": rec.name}
    if rec.genus is not None:
        out["genus"] = rec.genus
    out["alexander"] = _padded(rec.alexander)
    invs = []
    for inv in rec.invariants:
        entry = {"char": inv.field.characteristic, "nu": inv.nu, "r": inv.r,
                 "shape": inv.shape.value}
        if inv.field.characteristic in rec.provenance:
            entry["provenance"] = rec.provenance[inv.field.characteristic]
        invs.append(entry)
    out["invariants"] = invs
    if rec.annotations:
        out["annotations"] = rec.annotations
    if rec.mirror_of:
        out["mirror_of"] = rec.mirror_of
    return out


def _padded(poly: LaurentPoly) -> list[int]:
    if poly.is_zero:
        return [0]
    g = max(abs(poly.low), abs(poly.high))
    d = poly.as_dict()
    return [d.get(e, 0) for e in range(-g, g + 1)]


def _req(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise DatabaseFormatError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise DatabaseFormatError(f"{where}: field {key!r} has type {type(val).__name__}")
    return val


def record_from_json(obj: dict, index: int = 0) -> KnotRecord:
    where = f"record {index}"
    if not isinstance(obj, dict):
        raise DatabaseFormatError(f"{where}: expected an object")
    name = _req(obj, "name", str, where)
    where = f"record {index} ({name})"
    alex = _req(obj, "alexander", list, where)
    if not alex or not all(isinstance(c, int) and not isinstance(c, bool) for c in alex):
        raise DatabaseFormatError(f"{where}: field 'alexander' must be a non-empty list of integers")
    if len(alex) % 2 == 0:
        raise DatabaseFormatError(f"{where}: field 'alexander' must have odd length")
    invs, prov = [], {}
    for j, e in enumerate(_req(obj, "invariants", list, where)):
        w = f"{where} invariants[{j}]"
        if not isinstance(e, dict):
            raise DatabaseFormatError(f"{w}: expected an object")
        char = _req(e, "char", int, w)
        shape = e.get("shape", "?")
        if shape not in ("V", "W", "?"):
            raise DatabaseFormatError(f"{w}: field 'shape' must be V, W or ?")
        try:
            fld = FieldLabel(char)
        except ValueError as exc:
            raise DatabaseFormatError(f"{w}: field 'char': {exc}") from None
        invs.append(FieldInvariants(_req(e, "nu", int, w), _req(e, "r", int, w), Shape(shape), fld))
        if "provenance" in e:
            prov[char] = e["provenance"]
    genus = obj.get("genus")
    if genus is not None and not isinstance(genus, int):
        raise DatabaseFormatError(f"{where}: field 'genus' must be an integer")
    return KnotRecord(name, LaurentPoly.symmetric(alex), invs, genus=genus,
                      annotations=obj.get("annotations", {}), mirror_of=obj.get("mirror_of"),
                      provenance=prov)


def dumps_db(db: list[KnotRecord]) -> str:
    return json.dumps([record_to_json(r) for r in db], indent=2, ensure_ascii=False) + "\n"


def loads_db(text: str) -> list[KnotRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatabaseFormatError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise DatabaseFormatError("top level must be a list of records")
    db = [record_from_json(obj, i) for i, obj in enumerate(data)]
    for v in lint_db(db):
        log.warning("%s", v)
    return db


def save_db(db: list[KnotRecord], path: str | Path) -> None:
    Path(path).write_text(dumps_db(db), encoding="utf-8")


def load_db(path: str | Path) -> list[KnotRecord]:
    return loads_db(Path(path).read_text(encoding="utf-8"))


def default_db() -> list[KnotRecord]:
    path = os.environ.get(DB_ENV)
    return load_db(path) if path else builtin_db()
