"""Finite categories as explicit composition tables.

A category is stored exactly: object ids, morphism ids with endpoints, an
identity assignment, and a total composition table over composable pairs.
Everything downstream (limits, lifting properties, reflectors, model
structures) is decided by exhaustive search over this data, so validation and
universal-property certificates here are the trust anchor for the whole
package.

Ids are opaque strings; all iteration is in sorted order, so every operation
is deterministic.  Values are immutable after construction and every function
is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

RESERVED_ID_PREFIX = "id_"


class CategoryError(Exception):
    """Malformed input or violated precondition."""


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.law} at {self.witness}"
        return f"{msg}: {self.detail}" if self.detail else msg


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: Violation | None = None
    missing: tuple[tuple[str, str], ...] = ()


class FinCat:
    """Objects, morphisms (id, src, dst), identities, and a composition table."""

    def __init__(self, objects, morphisms, identity, compose, name: str = ""):
        self.name = str(name)
        self.objects: tuple[str, ...] = tuple(sorted(str(o) for o in objects))
        triples = sorted((str(m), str(s), str(d)) for (m, s, d) in morphisms)
        self.morphisms: tuple[str, ...] = tuple(m for (m, _, _) in triples)
        self.src: dict[str, str] = {m: s for (m, s, _) in triples}
        self.dst: dict[str, str] = {m: d for (m, _, d) in triples}
        self.identity: dict[str, str] = {str(o): str(m) for o, m in dict(identity).items()}
        self.compose: dict[tuple[str, str], str] = {
            (str(g), str(f)): str(h) for (g, f), h in dict(compose).items()
        }
        self._n_morphism_entries = len(triples)
        obj_set = set(self.objects)
        self._hom: dict[tuple[str, str], tuple[str, ...]] = {}
        for m in self.morphisms:
            s, d = self.src[m], self.dst[m]
            if s in obj_set and d in obj_set:
                self._hom.setdefault((s, d), ())
        for (s, d) in list(self._hom):
            self._hom[(s, d)] = tuple(m for m in self.morphisms
                                      if self.src[m] == s and self.dst[m] == d)
        self._isos: frozenset[str] | None = None
        self._op: FinCat | None = None
        self._cache: dict = {}

    # -- basic accessors ---------------------------------------------------

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return self._hom.get((a, b), ())

    def comp(self, g: str, f: str) -> str:
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise CategoryError(f"composition table has no entry for ({g}, {f})") from None

    def id_of(self, obj: str) -> str:
        try:
            return self.identity[obj]
        except KeyError:
            raise CategoryError(f"no identity recorded for object {obj!r}") from None

    def has_object(self, obj: str) -> bool:
        return obj in self.identity and obj in set(self.objects)

    def has_morphism(self, m: str) -> bool:
        return m in self.src

    def require_morphism(self, m: str) -> None:
        if not self.has_morphism(m):
            raise CategoryError(f"unknown morphism id {m!r}")

    def is_identity(self, m: str) -> bool:
        return self.identity.get(self.src.get(m, "")) == m

    def parallel(self, f: str, g: str) -> bool:
        return self.src[f] == self.src[g] and self.dst[f] == self.dst[g]

    # -- isomorphisms --------------------------------------------------------

    def inverse(self, f: str) -> str | None:
        s, d = self.src[f], self.dst[f]
        for g in self.hom(d, s):
            if self.comp(g, f) == self.id_of(s) and self.comp(f, g) == self.id_of(d):
                return g
        return None

    def isos(self) -> frozenset[str]:
        if self._isos is None:
            self._isos = frozenset(m for m in self.morphisms if self.inverse(m) is not None)
        return self._isos

    def is_iso(self, f: str) -> bool:
        return f in self.isos()

    # -- structural identity -------------------------------------------------

    def canonical(self) -> tuple:
        return (
            self.objects,
            tuple((m, self.src[m], self.dst[m]) for m in self.morphisms),
            tuple(sorted(self.identity.items())),
            tuple(sorted(self.compose.items())),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, FinCat) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        label = self.name or "FinCat"
        return f"<{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    # -- serialization ---------------------------------------------------------

    @classmethod
    def from_json_dict(cls, data: dict) -> "FinCat":
        """Parse the category file format, auto-generating omitted identities.

        Auto-generated identities use the reserved id ``id_<object>``; the
        compose table may reference them, and their composition rows are
        filled in (without overriding explicit entries).
        """
        if not isinstance(data, dict):
            raise CategoryError("category file must be a JSON object")
        try:
            objects = [str(o) for o in data["objects"]]
            raw_mors = [(str(m["id"]), str(m["src"]), str(m["dst"]))
                        for m in data.get("morphisms", [])]
            raw_comp = {(str(r["g"]), str(r["f"])): str(r["gf"])
                        for r in data.get("compose", [])}
        except (KeyError, TypeError) as exc:
            raise CategoryError(f"malformed category file: {exc}") from exc
        identity = {str(o): str(m) for o, m in data.get("identity", {}).items()}

        mor_ids = {m for (m, _, _) in raw_mors}
        for obj in objects:
            if obj in identity:
                continue
            auto = RESERVED_ID_PREFIX + obj
            if auto in mor_ids:
                raise CategoryError(
                    f"reserved identity id {auto!r} already used; declare identities explicitly")
            identity[obj] = auto
            raw_mors.append((auto, obj, obj))
            mor_ids.add(auto)
        src = {m: s for (m, s, _) in raw_mors}
        dst = {m: d for (m, _, d) in raw_mors}
        for m in sorted(mor_ids):
            if src[m] in identity:
                raw_comp.setdefault((m, identity[src[m]]), m)
            if dst[m] in identity:
                raw_comp.setdefault((identity[dst[m]], m), m)
        return cls(objects, raw_mors, identity, raw_comp, name=str(data.get("name", "")))

    def to_json_dict(self) -> dict:
        out = {
            "objects": list(self.objects),
            "morphisms": [{"id": m, "src": self.src[m], "dst": self.dst[m]}
                          for m in self.morphisms],
            "identity": dict(sorted(self.identity.items())),
            "compose": [{"g": g, "f": f, "gf": h}
                        for (g, f), h in sorted(self.compose.items())],
        }
        if self.name:
            out["name"] = self.name
        return out


# -- validation ---------------------------------------------------------------


def validate_category(cat: FinCat) -> ValidationReport:
    """Check the category laws exhaustively; report the first violation.

    A partial composition table is reported with the full list of missing
    composable pairs.
    """
    if len(set(cat.objects)) != len(cat.objects):
        return _fail("unique-object-ids", (), "duplicate object ids")
    if cat._n_morphism_entries != len(set(cat.morphisms)):
        return _fail("unique-morphism-ids", (), "duplicate morphism ids")
    obj_set = set(cat.objects)
    for m in cat.morphisms:
        if cat.src[m] not in obj_set or cat.dst[m] not in obj_set:
            return _fail("morphism-endpoints", (m,),
                         f"src={cat.src[m]!r} dst={cat.dst[m]!r} not both objects")
    mor_set = set(cat.morphisms)
    for obj in cat.objects:
        i = cat.identity.get(obj)
        if i is None:
            return _fail("identity-assignment", (obj,), "object has no identity")
        if i not in mor_set or cat.src[i] != obj or cat.dst[i] != obj:
            return _fail("identity-assignment", (obj, i),
                         "identity is not an endomorphism of its object")
    for obj, i in sorted(cat.identity.items()):
        if obj not in obj_set:
            return _fail("identity-assignment", (obj, i), "identity for unknown object")

    composable = [(g, f) for g in cat.morphisms for f in cat.morphisms
                  if cat.src[g] == cat.dst[f]]
    missing = tuple((g, f) for (g, f) in composable if (g, f) not in cat.compose)
    if missing:
        return ValidationReport(
            ok=False,
            violation=Violation("compose-total", missing[0],
                                f"{len(missing)} composable pairs missing"),
            missing=missing,
        )
    for (g, f), h in sorted(cat.compose.items()):
        if g not in mor_set or f not in mor_set or h not in mor_set:
            return _fail("compose-refs", (g, f, h), "entry references unknown morphism")
        if cat.src[g] != cat.dst[f]:
            return _fail("compose-domain", (g, f), "entry for a non-composable pair")
    for (g, f) in composable:
        h = cat.compose[(g, f)]
        if cat.src[h] != cat.src[f] or cat.dst[h] != cat.dst[g]:
            return _fail("compose-src-dst", (g, f, h),
                         f"composite has src={cat.src[h]!r} dst={cat.dst[h]!r}")
    for f in cat.morphisms:
        if cat.compose[(cat.identity[cat.dst[f]], f)] != f:
            return _fail("unit-left", (f,), "id_dst(f) . f != f")
        if cat.compose[(f, cat.identity[cat.src[f]])] != f:
            return _fail("unit-right", (f,), "f . id_src(f) != f")
    for h in cat.morphisms:
        for g in cat.morphisms:
            if cat.src[h] != cat.dst[g]:
                continue
            hg = cat.compose[(h, g)]
            for f in cat.morphisms:
                if cat.src[g] != cat.dst[f]:
                    continue
                if cat.compose[(hg, f)] != cat.compose[(h, cat.compose[(g, f)])]:
                    return _fail("associativity", (h, g, f), "(h.g).f != h.(g.f)")
    return ValidationReport(ok=True)


def _fail(law: str, witness: tuple, detail: str) -> ValidationReport:
    return ValidationReport(ok=False, violation=Violation(law, witness, detail))


def require_valid(cat: FinCat) -> None:
    if "valid" not in cat._cache:
        cat._cache["valid"] = validate_category(cat)
    report = cat._cache["valid"]
    if not report.ok:
        raise CategoryError(f"invalid category: {report.violation}")


# -- morphism predicates --------------------------------------------------------


@dataclass(frozen=True)
class MorphismPredicates:
    is_iso: bool
    is_mono: bool
    is_epi: bool


def morphism_predicates(cat: FinCat, f: str) -> MorphismPredicates:
    """Decide iso/mono/epi for one morphism by exhaustive cancellation search."""
    cat.require_morphism(f)
    s, d = cat.src[f], cat.dst[f]
    mono = True
    for w in cat.objects:
        for u in cat.hom(w, s):
            for v in cat.hom(w, s):
                if u != v and cat.comp(f, u) == cat.comp(f, v):
                    mono = False
    epi = True
    for w in cat.objects:
        for u in cat.hom(d, w):
            for v in cat.hom(d, w):
                if u != v and cat.comp(u, f) == cat.comp(v, f):
                    epi = False
    return MorphismPredicates(is_iso=cat.is_iso(f), is_mono=mono, is_epi=epi)


# -- limits and colimits ----------------------------------------------------------

LIMIT_SHAPES = ("terminal", "initial", "binary-product", "binary-coproduct",
                "pullback", "pushout", "equalizer", "coequalizer")


@dataclass(frozen=True)
class LimitResult:
    """A certified (co)limit: apex, (co)cone legs, and for every competing
    (co)cone the unique mediating morphism.  Tests re-verify the certificate by
    independent cone enumeration."""
    shape: str
    args: tuple[str, ...]
    found: bool
    apex: str | None = None
    legs: tuple[str, ...] = ()
    mediators: dict = field(default_factory=dict)
    reason: str = ""


def terminal_object(cat: FinCat) -> LimitResult:
    for t in cat.objects:
        if all(len(cat.hom(x, t)) == 1 for x in cat.objects):
            return LimitResult("terminal", (), True, t, (),
                               {x: cat.hom(x, t)[0] for x in cat.objects})
    return LimitResult("terminal", (), False, reason="no object admits a unique map from every object")


def binary_product(cat: FinCat, a: str, b: str) -> LimitResult:
    args = (a, b)
    for apex in cat.objects:
        for p in cat.hom(apex, a):
            for q in cat.hom(apex, b):
                mediators = _product_mediators(cat, apex, p, q, a, b)
                if mediators is not None:
                    return LimitResult("binary-product", args, True, apex, (p, q), mediators)
    return LimitResult("binary-product", args, False, reason="no universal cone")


def _product_mediators(cat, apex, p, q, a, b):
    mediators = {}
    for x in cat.objects:
        for f in cat.hom(x, a):
            for g in cat.hom(x, b):
                ms = [m for m in cat.hom(x, apex)
                      if cat.comp(p, m) == f and cat.comp(q, m) == g]
                if len(ms) != 1:
                    return None
                mediators[(x, f, g)] = ms[0]
    return mediators


def equalizer(cat: FinCat, f: str, g: str) -> LimitResult:
    cat.require_morphism(f)
    cat.require_morphism(g)
    if not cat.parallel(f, g):
        raise CategoryError(f"equalizer needs a parallel pair, got {f!r}, {g!r}")
    args = (f, g)
    x = cat.src[f]
    for apex in cat.objects:
        for e in cat.hom(apex, x):
            if cat.comp(f, e) != cat.comp(g, e):
                continue
            mediators = {}
            ok = True
            for w in cat.objects:
                for u in cat.hom(w, x):
                    if cat.comp(f, u) != cat.comp(g, u):
                        continue
                    ms = [m for m in cat.hom(w, apex) if cat.comp(e, m) == u]
                    if len(ms) != 1:
                        ok = False
                        break
                    mediators[(w, u)] = ms[0]
                if not ok:
                    break
            if ok:
                return LimitResult("equalizer", args, True, apex, (e,), mediators)
    return LimitResult("equalizer", args, False, reason="no universal fork")


def pullback(cat: FinCat, f: str, g: str) -> LimitResult:
    """Pullback of the cospan  src(f) --f--> . <--g-- src(g)."""
    cat.require_morphism(f)
    cat.require_morphism(g)
    if cat.dst[f] != cat.dst[g]:
        raise CategoryError(f"pullback needs a cospan, got {f!r}, {g!r}")
    args = (f, g)
    a, b = cat.src[f], cat.src[g]
    for apex in cat.objects:
        for p in cat.hom(apex, a):
            for q in cat.hom(apex, b):
                if cat.comp(f, p) != cat.comp(g, q):
                    continue
                mediators = {}
                ok = True
                for w in cat.objects:
                    for u in cat.hom(w, a):
                        wanted = cat.comp(f, u)
                        for v in cat.hom(w, b):
                            if cat.comp(g, v) != wanted:
                                continue
                            ms = [m for m in cat.hom(w, apex)
                                  if cat.comp(p, m) == u and cat.comp(q, m) == v]
                            if len(ms) != 1:
                                ok = False
                                break
                            mediators[(w, u, v)] = ms[0]
                        if not ok:
                            break
                    if not ok:
                        break
                if ok:
                    return LimitResult("pullback", args, True, apex, (p, q), mediators)
    return LimitResult("pullback", args, False, reason="no universal cone over the cospan")


def initial_object(cat: FinCat) -> LimitResult:
    return _dualize(terminal_object(opposite(cat)), "initial")


def binary_coproduct(cat: FinCat, a: str, b: str) -> LimitResult:
    return _dualize(binary_product(opposite(cat), a, b), "binary-coproduct")


def coequalizer(cat: FinCat, f: str, g: str) -> LimitResult:
    return _dualize(equalizer(opposite(cat), f, g), "coequalizer")


def pushout(cat: FinCat, f: str, g: str) -> LimitResult:
    """Pushout of the span  dst(f) <--f-- . --g--> dst(g)."""
    cat.require_morphism(f)
    cat.require_morphism(g)
    if cat.src[f] != cat.src[g]:
        raise CategoryError(f"pushout needs a span, got {f!r}, {g!r}")
    return _dualize(pullback(opposite(cat), f, g), "pushout")


def _dualize(result: LimitResult, shape: str) -> LimitResult:
    # Morphism ids are shared with the opposite category, so certificates
    # transport verbatim.
    return LimitResult(shape, result.args, result.found, result.apex,
                       result.legs, result.mediators, result.reason)


def limit_search(cat: FinCat, shape: str, *args: str) -> LimitResult:
    require_valid(cat)
    table = {
        "terminal": (terminal_object, 0),
        "initial": (initial_object, 0),
        "binary-product": (binary_product, 2),
        "binary-coproduct": (binary_coproduct, 2),
        "pullback": (pullback, 2),
        "pushout": (pushout, 2),
        "equalizer": (equalizer, 2),
        "coequalizer": (coequalizer, 2),
    }
    if shape not in table:
        raise CategoryError(f"unknown limit shape {shape!r}")
    fn, arity = table[shape]
    if len(args) != arity:
        raise CategoryError(f"shape {shape!r} takes {arity} arguments, got {len(args)}")
    return fn(cat, *args)


@dataclass(frozen=True)
class BicompletenessReport:
    ok: bool
    missing: tuple[str, ...] | None = None   # (shape, *args) of the first absent (co)limit
    thin: bool = True
    note: str = ""


def is_finitely_bicomplete(cat: FinCat) -> BicompletenessReport:
    """Terminal, initial, all binary (co)products, all (co)equalizers.

    For a finite category these generate all finite (co)limits.  Thinness (at
    most one morphism between any two objects) is reported as a diagnostic:
    a finite category with all binary products is necessarily thin, since
    hom(A, B)^n embeds in hom(A, B^n), which is bounded.
    """
    require_valid(cat)
    thin = all(len(cat.hom(a, b)) <= 1 for a in cat.objects for b in cat.objects)
    note = "finite categories: binary (co)products and (co)equalizers generate all finite (co)limits"

    def report(shape, *args):
        return BicompletenessReport(False, (shape,) + args, thin, note)

    if not terminal_object(cat).found:
        return report("terminal")
    if not initial_object(cat).found:
        return report("initial")
    for a, b in combinations_with_replacement(cat.objects, 2):
        if not binary_product(cat, a, b).found:
            return report("binary-product", a, b)
        if not binary_coproduct(cat, a, b).found:
            return report("binary-coproduct", a, b)
    pairs = [(f, g) for f in cat.morphisms for g in cat.morphisms
             if f <= g and cat.parallel(f, g)]
    for f, g in pairs:
        if not equalizer(cat, f, g).found:
            return report("equalizer", f, g)
        if not coequalizer(cat, f, g).found:
            return report("coequalizer", f, g)
    return BicompletenessReport(True, None, thin, note)


def opposite(cat: FinCat) -> FinCat:
    """Reverse all morphisms; an involution up to structural equality."""
    if cat._op is None:
        op = FinCat(
            cat.objects,
            [(m, cat.dst[m], cat.src[m]) for m in cat.morphisms],
            cat.identity,
            {(f, g): h for (g, f), h in cat.compose.items()},
            name=f"{cat.name}^op" if cat.name else "",
        )
        cat._op = op
    return cat._op


# -- functors, natural transformations, full subcategories -------------------------


@dataclass(frozen=True)
class FunctorData:
    source: FinCat
    target: FinCat
    obj_map: dict
    mor_map: dict

    def on_obj(self, x: str) -> str:
        return self.obj_map[x]

    def on_mor(self, f: str) -> str:
        return self.mor_map[f]

    def check(self) -> list[Violation]:
        """Exhaustively verify totality, endpoints, identities, composition."""
        out = []
        for x in self.source.objects:
            if x not in self.obj_map:
                out.append(Violation("functor-obj-total", (x,)))
            elif self.obj_map[x] not in set(self.target.objects):
                out.append(Violation("functor-obj-target", (x, self.obj_map[x])))
        for f in self.source.morphisms:
            if f not in self.mor_map:
                out.append(Violation("functor-mor-total", (f,)))
                continue
            ff = self.mor_map[f]
            if not self.target.has_morphism(ff):
                out.append(Violation("functor-mor-target", (f, ff)))
                continue
            if self.target.src[ff] != self.obj_map.get(self.source.src[f]) or \
               self.target.dst[ff] != self.obj_map.get(self.source.dst[f]):
                out.append(Violation("functor-endpoints", (f, ff)))
        if out:
            return out
        for x in self.source.objects:
            if self.mor_map[self.source.id_of(x)] != self.target.id_of(self.obj_map[x]):
                out.append(Violation("functor-identity", (x,)))
        for (g, f), h in sorted(self.source.compose.items()):
            got = self.target.comp(self.mor_map[g], self.mor_map[f])
            if got != self.mor_map[h]:
                out.append(Violation("functor-composition", (g, f), f"F(g.f) != F(g).F(f) ({got})"))
        return out

    def is_valid(self) -> bool:
        return not self.check()


def identity_functor(cat: FinCat) -> FunctorData:
    return FunctorData(cat, cat, {x: x for x in cat.objects},
                       {m: m for m in cat.morphisms})


def compose_functors(first: FunctorData, second: FunctorData) -> FunctorData:
    """second . first (apply `first`, then `second`)."""
    if first.target != second.source:
        raise CategoryError("functors not composable")
    return FunctorData(
        first.source, second.target,
        {x: second.obj_map[y] for x, y in first.obj_map.items()},
        {f: second.mor_map[g] for f, g in first.mor_map.items()},
    )


@dataclass(frozen=True)
class NatTransData:
    source: FunctorData
    target: FunctorData
    components: dict   # object id -> morphism id in the shared target category

    def at(self, x: str) -> str:
        return self.components[x]

    def check(self) -> list[Violation]:
        out = []
        if self.source.source != self.target.source or self.source.target != self.target.target:
            return [Violation("nat-shape", (), "source/target functors not parallel")]
        cat, tgt = self.source.source, self.source.target
        for x in cat.objects:
            c = self.components.get(x)
            if c is None:
                out.append(Violation("nat-total", (x,)))
                continue
            if not tgt.has_morphism(c) or tgt.src[c] != self.source.obj_map[x] \
               or tgt.dst[c] != self.target.obj_map[x]:
                out.append(Violation("nat-component", (x, c)))
        if out:
            return out
        for f in cat.morphisms:
            x, y = cat.src[f], cat.dst[f]
            lhs = tgt.comp(self.components[y], self.source.mor_map[f])
            rhs = tgt.comp(self.target.mor_map[f], self.components[x])
            if lhs != rhs:
                out.append(Violation("naturality", (f,), f"{lhs} != {rhs}"))
        return out

    def is_valid(self) -> bool:
        return not self.check()


@dataclass(frozen=True)
class FullSubcat:
    parent: FinCat
    members: frozenset

    def __post_init__(self):
        bad = self.members - set(self.parent.objects)
        if bad:
            raise CategoryError(f"subcategory members not in parent: {sorted(bad)}")

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


def iso_classes(cat: FinCat) -> tuple[tuple[str, ...], ...]:
    """Isomorphism classes of objects, each sorted, ordered by least member."""
    require_valid(cat)
    remaining = set(cat.objects)
    classes = []
    for x in cat.objects:
        if x not in remaining:
            continue
        cls = {y for y in cat.objects if any(cat.is_iso(f) for f in cat.hom(x, y))}
        cls.add(x)
        remaining -= cls
        classes.append(tuple(sorted(cls)))
    return tuple(sorted(classes))
