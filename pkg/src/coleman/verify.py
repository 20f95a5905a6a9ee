"""Verification harness: structural checks keyed by id, question scanners,
and the catalog runner.

Every check produces one report: each hypothesis is validated individually
and carries a witness on failure; the conclusion is only evaluated when all
hypotheses hold.  A failed hypothesis yields status "not-applicable", never a
verdict on the conclusion.  A failed conclusion is a "contradiction", the
scientifically interesting outcome, and makes the CLI exit 2.  Order-cap
hits are recorded in cap_notes with status "incomplete".
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .automorphisms import (
    Automorphism,
    aut_c_and_col,
    automorphism_group,
    out_c,
    out_c_cap_out_col,
    out_col,
)
from .config import Caps, default_caps
from .constructors import build, standard_catalog
from .core import FiniteGroup, SubgroupHandle, factorize, is_prime
from .errors import (
    GroupError,
    InvalidTwist,
    NotAnAutomorphism,
    OrderCapExceeded,
    SubsetNotClosed,
    UnknownTheoremId,
)
from .nilcyclic import phi_automorphism, predicted_complement, presentation_from
from .search import is_isomorphic
from .structure import (
    core_subgroups,
    has_cyclic_chief_factor,
    is_nilpotent,
    is_simple,
    layer,
    minimal_normal_subgroups,
    normal_subgroups,
    sylow_subgroup,
)

REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "theorem",
        "group",
        "hypotheses",
        "conclusion",
        "status",
        "timing_ms",
        "cap_notes",
    ],
    "properties": {
        "theorem": {"type": "string"},
        "group": {"type": "object"},
        "hypotheses": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "witness"],
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                },
            },
        },
        "conclusion": {
            "type": ["object", "null"],
            "required": ["passed", "detail"],
            "properties": {
                "passed": {"type": "boolean"},
                "detail": {"type": "string"},
            },
        },
        "status": {
            "enum": ["passed", "not-applicable", "contradiction", "incomplete"]
        },
        "timing_ms": {"type": "number"},
        "cap_notes": {"type": "array", "items": {"type": "string"}},
    },
}


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


class _Reporter:
    def __init__(self, theorem: str, spec: dict):
        self.theorem = theorem
        self.spec = spec
        self.hypotheses: list[dict] = []
        self.conclusion: dict | None = None
        self.cap_notes: list[str] = []
        self.t0 = time.perf_counter()

    def hyp(self, name: str, passed: bool, witness=None) -> bool:
        self.hypotheses.append(
            {"name": name, "passed": bool(passed), "witness": witness}
        )
        return bool(passed)

    def conclude(self, passed: bool, detail: str):
        self.conclusion = {"passed": bool(passed), "detail": detail}

    def report(self) -> dict:
        if self.cap_notes:
            status = "incomplete"
        elif any(not h["passed"] for h in self.hypotheses):
            status = "not-applicable"
            self.conclusion = None
        elif self.conclusion is None:
            status = "incomplete"
        elif self.conclusion["passed"]:
            status = "passed"
        else:
            status = "contradiction"
        return {
            "theorem": self.theorem,
            "group": self.spec,
            "hypotheses": self.hypotheses,
            "conclusion": self.conclusion,
            "status": status,
            "timing_ms": round((time.perf_counter() - self.t0) * 1000, 3),
            "cap_notes": self.cap_notes,
        }


def resolve_members(
    G: FiniteGroup, value, caps: Caps, validate: bool = True
) -> SubgroupHandle:
    """Subgroup from params: an explicit index list or a named selector.

    Selectors: {"select": "base" | "acting" | "layer" | "fitting" | "center"
    | "o_p" | "sylow" | "unique-minimal-normal", "p": prime (for o_p/sylow)}.
    """
    if isinstance(value, list):
        return G.subgroup(value, validate=validate)
    if isinstance(value, dict) and "select" in value:
        kind = value["select"]
        info = getattr(G, "build_info", None)
        if kind == "base":
            if info is None or info.base is None:
                raise GroupError("group was not built with a base part")
            return info.base
        if kind == "acting":
            if info is None or info.acting is None:
                raise GroupError("group was not built with an acting part")
            return info.acting
        if kind == "layer":
            return layer(G, caps)
        if kind == "fitting":
            return core_subgroups(G, G.prime_set[0] if G.prime_set else 2, caps).fitting
        if kind == "center":
            return G.center()
        if kind == "o_p":
            return core_subgroups(G, int(value["p"]), caps).o_p
        if kind == "sylow":
            return sylow_subgroup(G, int(value["p"]))
        if kind == "unique-minimal-normal":
            mins = minimal_normal_subgroups(G, caps)
            if len(mins) != 1:
                raise GroupError(
                    f"group has {len(mins)} minimal normal subgroups, not 1"
                )
            return mins[0]
        raise GroupError(f"unknown selector {kind!r}")
    raise GroupError("subgroup params must be an index list or a selector")


def _p_power_order(sigma: Automorphism, p: int) -> bool:
    return set(factorize(sigma.order())) <= {p}


def _induces_identity_on_quotient(sigma: Automorphism, N: SubgroupHandle) -> bool:
    G = sigma.group
    return all(
        N.contains(G.multiply(sigma.images[x], G.inverse(x)))
        for x in range(G.order)
    )


def _maps_onto(sigma: Automorphism, H: SubgroupHandle) -> bool:
    return all(H.contains(sigma.images[m]) for m in H.members)


def _out_col_trivial_conclusion(G: FiniteGroup, caps: Caps, rep: _Reporter):
    oc = out_col(G, caps)
    if oc.is_trivial():
        rep.conclude(True, "every Coleman automorphism is inner")
    else:
        witness = oc.representatives[1].images
        rep.conclude(
            False,
            f"|Out_col| = {oc.order}; non-inner Coleman witness images {list(witness)}",
        )


# -- checkers ---------------------------------------------------------------


def _check_t21(G, params, caps, rep):
    gm = params.get("g_members")
    if gm is None:
        Gsub = G.subgroup(range(G.order), validate=False)
    else:
        Gsub = resolve_members(G, gm, caps)
    N = resolve_members(G, params["n_members"], caps)
    if not rep.hyp(
        "the designated subgroup is normal in the whole group",
        Gsub.is_normal(),
        witness=None if Gsub.is_normal() else list(Gsub.members),
    ):
        return
    inside = N.member_set <= Gsub.member_set and N.order > 1
    if not rep.hyp(
        "N is a non-trivial subgroup of it",
        inside,
        witness=None if inside else list(N.members),
    ):
        return
    sub, to_parent = Gsub.as_group()
    back = {m: i for i, m in enumerate(to_parent)}
    n_inner = frozenset(back[m] for m in N.members)
    auts = automorphism_group(sub, caps)

    def characteristic(members: frozenset) -> Automorphism | None:
        for s in auts:
            if any(s.images[m] not in members for m in members):
                return s
        return None

    bad = characteristic(n_inner)
    if not rep.hyp(
        "N is characteristic",
        bad is None,
        witness=None if bad is None else list(bad.images),
    ):
        return
    offender = None
    for H in normal_subgroups(sub, caps):
        if 1 < H.order < len(n_inner) and H.member_set < n_inner:
            if characteristic(H.member_set) is None:
                offender = sorted(to_parent[m] for m in H.members)
                break
    if not rep.hyp(
        "N is minimal among non-trivial characteristic subgroups",
        offender is None,
        witness=offender,
    ):
        return
    cent = G.centralizer(N.generators())
    outside = [c for c in cent.members if not N.contains(c)]
    if not rep.hyp(
        "the centralizer of N is contained in N",
        not outside,
        witness=outside[:1] or None,
    ):
        return
    _out_col_trivial_conclusion(G, caps, rep)


def _check_t22(G, params, caps, rep):
    p = int(params["p"])
    P = resolve_members(G, params["members"], caps)
    if not rep.hyp("P is a p-group", P.is_p_subgroup(p), witness=P.order):
        return
    if not rep.hyp(
        "P is normal",
        P.is_normal(),
        witness=None if P.is_normal() else list(P.members),
    ):
        return
    cent = G.centralizer(P.generators())
    outside = [c for c in cent.members if not P.contains(c)]
    if not rep.hyp(
        "the centralizer of P is contained in P",
        not outside,
        witness=outside[:1] or None,
    ):
        return
    auts = automorphism_group(G, caps)
    bad = None
    if p in G.prime_set:
        for s in auts:
            if s.is_p_central(p) and not s.is_inner():
                bad = s
                break
    if bad is not None:
        rep.conclude(
            False, f"non-inner p-central automorphism, images {list(bad.images)}"
        )
        return
    oc = out_col(G, caps)
    if oc.is_trivial():
        rep.conclude(
            True, "all p-central automorphisms are inner and Out_col is trivial"
        )
    else:
        rep.conclude(False, f"|Out_col| = {oc.order}")


def _check_c24(G, params, caps, rep):
    info = getattr(G, "build_info", None)
    is_wreath = info is not None and info.spec.get("construct") == "wreath"
    if not rep.hyp(
        "group is a wreath product",
        is_wreath,
        witness=None if is_wreath else (info.spec.get("construct") if info else None),
    ):
        return
    copy_group, _ = info.copies[0].as_group()
    simple = is_simple(copy_group, caps)
    if not rep.hyp("the repeated factor is simple", simple, witness=copy_group.order):
        return
    B = info.base
    Bgrp, to_parent = B.as_group()
    z_members = {to_parent[m] for m in Bgrp.center().members}
    cent = G.centralizer(B.generators())
    outside = [c for c in cent.members if c not in z_members]
    if not rep.hyp(
        "the centralizer of the base power lies in its center",
        not outside,
        witness=outside[:1] or None,
    ):
        return
    _out_col_trivial_conclusion(G, caps, rep)


def _check_c25(G, params, caps, rep):
    info = getattr(G, "build_info", None)
    spec = info.spec if info else {}
    shape_ok = (
        spec.get("construct") == "wreath"
        and spec.get("base", {}).get("construct") == "symmetric"
        and spec.get("top", {}).get("construct") == "symmetric"
    )
    if not rep.hyp(
        "group is a wreath product of symmetric groups",
        shape_ok,
        witness=None if shape_ok else spec.get("construct"),
    ):
        return
    _out_col_trivial_conclusion(G, caps, rep)


def _check_t26(G, params, caps, rep):
    info = getattr(G, "build_info", None)
    is_hol = info is not None and info.spec.get("construct") == "holomorph"
    if not rep.hyp(
        "group is a holomorph",
        is_hol,
        witness=None if is_hol else (info.spec.get("construct") if info else None),
    ):
        return
    base_group, _ = info.base.as_group()
    simple = is_simple(base_group, caps)
    if not rep.hyp("the base group is simple", simple, witness=base_group.order):
        return
    _out_col_trivial_conclusion(G, caps, rep)


def _check_c27(G, params, caps, rep):
    info = getattr(G, "build_info", None)
    is_hol = info is not None and info.spec.get("construct") == "holomorph"
    if not rep.hyp(
        "group is a holomorph",
        is_hol,
        witness=None if is_hol else (info.spec.get("construct") if info else None),
    ):
        return
    base_group, _ = info.base.as_group()
    nil = is_nilpotent(base_group)
    if not rep.hyp("the base group is nilpotent", nil, witness=base_group.order):
        return
    _out_col_trivial_conclusion(G, caps, rep)


def _check_t29a(G, params, caps, rep):
    mins = minimal_normal_subgroups(G, caps)
    if not rep.hyp(
        "there is a unique minimal non-trivial normal subgroup",
        len(mins) == 1,
        witness=[H.order for H in mins],
    ):
        return
    N = mins[0]
    Ngrp, _ = N.as_group()
    if not rep.hyp(
        "the minimal normal subgroup is non-abelian",
        not Ngrp.is_abelian(),
        witness=N.order,
    ):
        return
    _out_col_trivial_conclusion(G, caps, rep)


def _check_t210(G, params, caps, rep):
    p = int(params["p"])
    if not rep.hyp("p is an odd prime", is_prime(p) and p != 2, witness=p):
        return
    e_value = params.get("e_members", {"select": "layer"})
    E = resolve_members(G, e_value, caps)
    ok = E.order > 1 and E.is_normal()
    if not rep.hyp("E is a non-trivial normal subgroup", ok, witness=E.order):
        return
    Egrp, to_parent = E.as_group()
    factors = minimal_normal_subgroups(Egrp, caps)
    decomposition_ok = True
    witness = None
    prod = 1
    for M in factors:
        Mgrp, _ = M.as_group()
        prod *= M.order
        if Mgrp.is_abelian() or not is_simple(Mgrp, caps):
            decomposition_ok = False
            witness = M.order
            break
    if decomposition_ok and prod != E.order:
        decomposition_ok = False
        witness = prod
    if not rep.hyp(
        "E is a direct product of non-abelian simple groups",
        decomposition_ok,
        witness=witness,
    ):
        return
    cent = G.centralizer(E.generators())
    outside = [c for c in cent.members if not E.contains(c)]
    if not rep.hyp(
        "the centralizer of E is contained in E",
        not outside,
        witness=outside[:1] or None,
    ):
        return
    divides_all = all(M.order % p == 0 for M in factors)
    if not rep.hyp(
        "p divides the order of every simple factor",
        divides_all,
        witness=[M.order for M in factors],
    ):
        return
    oc = out_col(G, caps)
    if oc.order % p == 0:
        rep.conclude(False, f"p = {p} divides |Out_col| = {oc.order}")
    else:
        rep.conclude(True, f"|Out_col| = {oc.order} is prime to {p}")


def _check_l16(G, params, caps, rep):
    p = int(params["p"])
    N = resolve_members(G, params["n_members"], caps)
    if not rep.hyp("p is prime", is_prime(p), witness=p):
        return
    if not rep.hyp(
        "N is normal",
        N.is_normal(),
        witness=None if N.is_normal() else list(N.members),
    ):
        return
    Ngrp, to_parent = N.as_group()
    z_parent = [to_parent[m] for m in Ngrp.center().members]
    opzn = G.subgroup(
        [z for z in z_parent if set(factorize(G.element_order(z))) <= {p}],
        validate=False,
    )
    scanned = 0
    for sigma in automorphism_group(G, caps):
        if not _p_power_order(sigma, p):
            continue
        if not sigma.fixes_pointwise(N.members):
            continue
        if not _induces_identity_on_quotient(sigma, N):
            continue
        scanned += 1
        for x in range(G.order):
            if not opzn.contains(
                G.multiply(sigma.images[x], G.inverse(x))
            ):
                rep.conclude(
                    False,
                    f"automorphism {list(sigma.images)} moves {x} outside "
                    f"O_p(Z(N))-cosets",
                )
                return
        fixes_sylow = (
            sigma.is_p_central(p) if p in G.prime_set else True
        )
        if fixes_sylow:
            if not any(
                sigma.agrees_with_conjugation_on(G.generating_sequence(), z)
                for z in opzn.members
            ):
                rep.conclude(
                    False,
                    f"automorphism {list(sigma.images)} is not conjugation "
                    f"by a member of O_p(Z(N))",
                )
                return
    rep.conclude(True, f"all {scanned} matching automorphisms comply")


def _restricts_properly(sigma: Automorphism, N: SubgroupHandle):
    if not _maps_onto(sigma, N):
        return None
    return sigma.restrict(N)


def _check_t17(G, params, caps, rep):
    p = int(params["p"])
    N = resolve_members(G, params["n_members"], caps)
    if not rep.hyp("N is normal", N.is_normal()):
        return
    index = G.order // N.order
    if not rep.hyp(
        "p is a prime not dividing the quotient order",
        is_prime(p) and index % p != 0,
        witness=index,
    ):
        return
    failures = []
    checked = 0
    for sigma in automorphism_group(G, caps):
        if not _p_power_order(sigma, p):
            continue
        col = sigma.is_coleman()
        cls = sigma.is_class_preserving()
        if not (col or cls):
            continue
        checked += 1
        restricted = _restricts_properly(sigma, N)
        if restricted is None:
            failures.append(("restriction", list(sigma.images)))
            continue
        if col and not restricted.is_coleman():
            failures.append(("coleman", list(sigma.images)))
        if cls and not restricted.is_class_preserving():
            failures.append(("class-preserving", list(sigma.images)))
    Ngrp, _ = N.as_group()
    transfer = []
    ocn = out_col(Ngrp, caps)
    ocg = out_col(G, caps)
    if ocn.order % p != 0 and ocg.order % p == 0:
        transfer.append(("out_col", ocn.order, ocg.order))
    ocn_c = out_c(Ngrp, caps)
    ocg_c = out_c(G, caps)
    if ocn_c.order % p != 0 and ocg_c.order % p == 0:
        transfer.append(("out_c", ocn_c.order, ocg_c.order))
    if failures or transfer:
        rep.conclude(False, f"failures: {failures + transfer}")
    else:
        rep.conclude(
            True,
            f"{checked} p-power automorphisms restrict properly; "
            f"p'-group property transfers",
        )


def _check_t18(G, params, caps, rep):
    p = int(params["p"])
    N = resolve_members(G, params["n_members"], caps)
    if not rep.hyp("N is normal", N.is_normal()):
        return
    index = G.order // N.order
    if not rep.hyp(
        "p is a prime not dividing the quotient order",
        is_prime(p) and index % p != 0,
        witness=index,
    ):
        return
    Ngrp, _ = N.as_group()
    inter_n = out_c_cap_out_col(Ngrp, caps)
    inter_g = out_c_cap_out_col(G, caps)
    if inter_n.order % p != 0 and inter_g.order % p == 0:
        rep.conclude(
            False,
            f"intersection is a p'-group in the subgroup ({inter_n.order}) "
            f"but not in the whole group ({inter_g.order})",
        )
    else:
        rep.conclude(
            True,
            f"intersection orders {inter_n.order} -> {inter_g.order} "
            f"respect the p'-group transfer",
        )


def _check_c42(G, params, caps, rep):
    p = int(params["p"])
    N = resolve_members(G, params["n_members"], caps)
    if not rep.hyp("N is normal", N.is_normal()):
        return
    from .core import quotient_group

    Q, _ = quotient_group(G, N)
    if not rep.hyp("the quotient is abelian", Q.is_abelian(), witness=Q.order):
        return
    if not rep.hyp(
        "p is a prime dividing the group order",
        is_prime(p) and G.order % p == 0,
        witness=p,
    ):
        return
    from .structure import all_sylow_subgroups

    nps = []
    for P in all_sylow_subgroups(G, p):
        NP = G.generated_subgroup(set(N.members) | set(P.members))
        nps.append(NP)
    mismatches = []
    for sigma in aut_c_and_col(G, caps):
        rhs = any(
            any(
                sigma.agrees_with_conjugation_on(NP.generators(), g)
                for g in range(G.order)
            )
            for NP in nps
        )
        if sigma.is_inner() != rhs:
            mismatches.append((sigma.is_inner(), rhs, list(sigma.images)))
    if mismatches:
        rep.conclude(False, f"equivalence fails: {mismatches[:1]}")
    else:
        rep.conclude(
            True,
            "inner coincides with agreeing with a conjugation on N*P "
            "for every class-preserving Coleman automorphism",
        )


def _check_t4x(G, params, caps, rep, p: int, quotient_condition: str):
    N = resolve_members(G, params["n_members"], caps)
    if not rep.hyp("N is normal", N.is_normal()):
        return
    Ngrp, to_parent = N.as_group()
    if not rep.hyp("N is nilpotent", is_nilpotent(Ngrp)):
        return
    from .core import quotient_group

    Q, _ = quotient_group(G, N)
    if quotient_condition == "cyclic":
        q_ok = any(Q.element_order(i) == Q.order for i in range(Q.order))
        if not rep.hyp("the quotient is cyclic", q_ok, witness=Q.order):
            return
    else:
        if not rep.hyp("the quotient is nilpotent", is_nilpotent(Q), witness=Q.order):
            return
        if p in Q.prime_set:
            sq = sylow_subgroup(Q, p)
            sq_grp, _ = sq.as_group()
            cyc = any(
                sq_grp.element_order(i) == sq_grp.order
                for i in range(sq_grp.order)
            )
        else:
            cyc = True
        if not rep.hyp(
            "the Sylow p-subgroup of the quotient is cyclic", cyc, witness=Q.order
        ):
            return
    if p in Ngrp.prime_set:
        sn = sylow_subgroup(Ngrp, p)
        sn_grp, _ = sn.as_group()
        abelian = sn_grp.is_abelian()
    else:
        abelian = True
    if not rep.hyp(
        "the Sylow p-subgroup of N is abelian", abelian, witness=N.order
    ):
        return
    bad = None
    checked = 0
    for sigma in aut_c_and_col(G, caps):
        if not _p_power_order(sigma, p):
            continue
        checked += 1
        if not sigma.is_inner():
            bad = sigma
            break
    if bad is not None:
        rep.conclude(
            False,
            f"non-inner class-preserving Coleman automorphism of {p}-power "
            f"order, images {list(bad.images)}",
        )
    else:
        rep.conclude(
            True,
            f"all {checked} class-preserving Coleman automorphisms of "
            f"{p}-power order are inner",
        )


def _check_t41(G, params, caps, rep):
    _check_t4x(G, params, caps, rep, p=2, quotient_condition="cyclic")


def _check_t43(G, params, caps, rep):
    _check_t4x(G, params, caps, rep, p=int(params["p"]), quotient_condition="cyclic")


def _check_t44(G, params, caps, rep):
    _check_t4x(
        G, params, caps, rep, p=int(params["p"]), quotient_condition="nilpotent"
    )


def _check_t37(G, params, caps, rep):
    n_value = params.get("n_members", {"select": "base"})
    N = resolve_members(G, n_value, caps)
    if not rep.hyp("N is normal", N.is_normal()):
        return
    Ngrp, _ = N.as_group()
    if not rep.hyp("N is nilpotent", is_nilpotent(Ngrp)):
        return
    index = G.order // N.order
    fact = factorize(index) if index > 1 else {}
    prime_power = len(fact) == 1
    if not rep.hyp(
        "the quotient is a non-trivial cyclic group of prime-power order",
        prime_power,
        witness=index,
    ):
        return
    try:
        pres = presentation_from(G, N, caps)
        predicted = predicted_complement(pres)
        phis = [phi_automorphism(s) for s in predicted.phi_specs]
    except (SubsetNotClosed, InvalidTwist, NotAnAutomorphism, GroupError) as exc:
        rep.conclude(False, f"structure computation failed: {exc}")
        return
    problems = []
    non_coleman = [i for i, s in enumerate(phis) if not s.is_coleman()]
    if non_coleman:
        problems.append(f"twist maps {non_coleman} are not Coleman")
    for i in range(len(phis)):
        for j in range(i + 1, len(phis)):
            if phis[i].compose(phis[j].inverse()).is_inner():
                problems.append(f"maps {i} and {j} agree modulo inner")
                break
    oc = out_col(G, caps)
    if len(phis) != oc.order:
        problems.append(f"predicted order {len(phis)} != |Out_col| = {oc.order}")
    if not problems:
        # the classes coincide; compare the group structures
        k = len(phis)
        table = []
        for a in range(k):
            row = []
            for b in range(k):
                prod = phis[a].compose(phis[b])
                hit = next(
                    (
                        c
                        for c in range(k)
                        if prod.compose(phis[c].inverse()).is_inner()
                    ),
                    None,
                )
                if hit is None:
                    problems.append("predicted classes are not closed")
                    break
                row.append(hit)
            if len(row) < k:
                break
            table.append(row)
        if not problems:
            ident = next(
                (i for i, s in enumerate(phis) if s.is_inner()), None
            )
            if ident is None:
                problems.append("predicted complement misses the inner class")
                rep.conclude(False, "; ".join(problems))
                return
            remap = list(range(k))
            remap[0], remap[ident] = remap[ident], remap[0]
            k_table = [
                [remap.index(table[remap[a]][remap[b]]) for b in range(k)]
                for a in range(k)
            ]
            Kgrp = FiniteGroup.from_table(k_table, name="predicted-complement")
            if not is_isomorphic(Kgrp, oc.cosets, caps):
                problems.append("predicted complement is not isomorphic to Out_col")
            if predicted.invariants is not None:
                want = sorted(d for d in predicted.invariants if d > 1)
                got = sorted(oc.abelian_invariants() or [])
                if want != got:
                    problems.append(f"invariants {want} != computed {got}")
                divis = all(pres.r[-1] % ri == 0 for ri in pres.r)
                if not divis:
                    problems.append(f"r_i do not divide r_k: {pres.r}")
    if problems:
        rep.conclude(False, "; ".join(problems))
    else:
        inv = (
            sorted(d for d in predicted.invariants if d > 1)
            if predicted.invariants is not None
            else None
        )
        rep.conclude(
            True,
            f"Out_col matches the predicted complement: order {oc.order}, "
            f"exponents r = {pres.r}, invariants {inv}",
        )


_CHECKERS: dict[str, Callable] = {
    "T2.1": _check_t21,
    "T2.2": _check_t22,
    "C2.4": _check_c24,
    "C2.5": _check_c25,
    "T2.6": _check_t26,
    "C2.7": _check_c27,
    "T2.9a": _check_t29a,
    "T2.10": _check_t210,
    "L1.6": _check_l16,
    "T1.7": _check_t17,
    "T1.8": _check_t18,
    "C4.2": _check_c42,
    "T4.1": _check_t41,
    "T4.3": _check_t43,
    "T4.4": _check_t44,
    "T3.7": _check_t37,
}


def theorem_ids() -> list[str]:
    return sorted(_CHECKERS)


def check(
    theorem_id: str,
    spec: dict,
    params: dict | None = None,
    caps: Caps | None = None,
) -> dict:
    """Run one checker and return its report."""
    if theorem_id not in _CHECKERS:
        raise UnknownTheoremId(f"no checker for {theorem_id!r}")
    caps = caps or default_caps()
    params = params or {}
    rep = _Reporter(theorem_id, spec)
    try:
        G = build(spec, caps)
        _CHECKERS[theorem_id](G, params, caps, rep)
    except OrderCapExceeded as exc:
        rep.cap_notes.append(str(exc))
    return rep.report()


# -- question scanners -------------------------------------------------------


def scan_questions(max_order: int, caps: Caps | None = None) -> dict:
    """Per catalog group and prime: the three open-question implications.

    Q1: no order-p chief factor  =>  p does not divide |Out_col|.
    Q2: trivial O_{p'}           =>  Out_col trivial.
    Q3: unique minimal normal    =>  Out_col trivial.
    """
    caps = caps or default_caps()
    groups = []
    counterexamples = []
    cap_notes = []
    for name, spec in standard_catalog(max_order):
        G = build(spec, caps)
        try:
            entry = _scan_one(name, G, caps)
        except OrderCapExceeded as exc:
            cap_notes.append(f"{name}: {exc}")
            continue
        groups.append(entry)
        for q in entry["questions"]:
            if q["status"] == "counterexample":
                counterexamples.append({"group": name, **q})
    return {
        "max_order": max_order,
        "groups": groups,
        "counterexamples": counterexamples,
        "cap_notes": cap_notes,
    }


def _scan_one(name: str, G: FiniteGroup, caps: Caps) -> dict:
    oc = out_col(G, caps)
    questions = []
    for p in G.prime_set:
        premise = not has_cyclic_chief_factor(G, p, caps)
        holds = oc.order % p != 0
        questions.append(_question_row("Q1", p, premise, holds))
        premise = core_subgroups(G, p, caps).o_p_prime.order == 1
        holds = oc.is_trivial()
        questions.append(_question_row("Q2", p, premise, holds))
    mins = minimal_normal_subgroups(G, caps) if G.order > 1 else []
    premise = len(mins) == 1
    questions.append(_question_row("Q3", None, premise, oc.is_trivial()))
    return {
        "name": name,
        "order": G.order,
        "out_col_order": oc.order,
        "questions": questions,
    }


def _question_row(q: str, p: int | None, premise: bool, holds: bool) -> dict:
    if not premise:
        status = "vacuous"
    elif holds:
        status = "holds"
    else:
        status = "counterexample"
    return {
        "question": q,
        "p": p,
        "premise": premise,
        "conclusion": holds if premise else None,
        "status": status,
    }


# -- the standard check list and the catalog runner -------------------------


def standard_checks(max_order: int) -> list[tuple[str, str, dict, dict]]:
    """(theorem id, group name, group spec, params) for the stock instances."""
    catalog = dict(standard_catalog(max_order))
    orders = {
        name: order for name, order, _ in _catalog_orders()
    }
    rows: list[tuple[str, str, dict, dict]] = []

    def add(tid: str, name: str, params: dict, spec: dict | None = None):
        if spec is None:
            if name not in catalog:
                return
            spec = catalog[name]
        rows.append((tid, name, spec, params))

    o2 = {"select": "o_p", "p": 2}
    base = {"select": "base"}
    add("T2.1", "S4", {"n_members": o2})
    add("T2.1", "A5", {"n_members": {"select": "unique-minimal-normal"}})
    add("T2.2", "S4", {"p": 2, "members": o2})
    add("C2.4", "C2wrC2", {})
    add("C2.5", "S3wrS2", {})
    add("T2.6", "HolC5", {})
    add("T2.6", "HolC7", {})
    if max_order >= 7200:
        add(
            "T2.6",
            "HolA5",
            {},
            spec={
                "construct": "holomorph",
                "base": {"construct": "alternating", "n": 5},
            },
        )
    add("C2.7", "HolC8", {})
    add("C2.7", "HolC9", {})
    add("T2.9a", "A5", {})
    add("T2.9a", "S5", {})
    add("T2.10", "S5", {"p": 5, "e_members": {"select": "layer"}})
    add("T2.10", "S5", {"p": 3, "e_members": {"select": "layer"}})
    add("L1.6", "S4", {"p": 2, "n_members": o2})
    add("L1.6", "Q8", {"p": 2, "n_members": {"select": "center"}})
    add("T1.7", "D30semi", {"p": 3, "n_members": base})
    add("T1.7", "S3wrS2", {"p": 3, "n_members": base})
    add("T1.8", "D30semi", {"p": 5, "n_members": base})
    add("C4.2", "D30semi", {"p": 3, "n_members": base})
    add("C4.2", "A4", {"p": 2, "n_members": o2})
    add("T4.1", "A4", {"n_members": o2})
    add("T4.1", "D30semi", {"n_members": base})
    add("T4.3", "D30semi", {"p": 2, "n_members": base})
    add("T4.3", "C12:C2", {"p": 2, "n_members": base})
    add("T4.4", "C15:C4", {"p": 2, "n_members": base})
    add("T4.4", "Q8xC3:C2", {"p": 3, "n_members": base})
    for name in ("D30semi", "C12:C2", "C15:C4", "C105:C2", "C91:C3", "C65:C4", "Q8:C4"):
        add("T3.7", name, {})
    return [
        row
        for row in rows
        if row[1] == "HolA5" or orders.get(row[1], 0) <= max_order
    ]


def _catalog_orders():
    from .constructors import _catalog_entries

    return _catalog_entries()


def _catalog_worker(args) -> dict:
    name, spec, checks, caps = args
    G = build(spec, caps)
    entry: dict = {
        "name": name,
        "order": G.order,
        "primes": list(G.prime_set),
        "cap_notes": [],
    }
    try:
        oc = out_col(G, caps)
        entry["out_col_order"] = oc.order
        entry["out_col_invariants"] = oc.abelian_invariants()
        auts = automorphism_group(G, caps)
        col = [s for s in auts if s.is_coleman()]
        cls = [s for s in auts if s.is_class_preserving()]
        bound_ok = set(factorize(max(len(col), 1))) <= set(G.prime_set) and set(
            factorize(max(len(cls), 1))
        ) <= set(G.prime_set)
        entry["prime_divisor_bound"] = bound_ok
        normals = normal_subgroups(G, caps)
        entry["normal_invariance"] = all(
            all(H.contains(s.images[m]) for m in H.members)
            for s in col
            for H in normals
        )
    except OrderCapExceeded as exc:
        entry["out_col_order"] = None
        entry["cap_notes"].append(str(exc))
    reports = [
        check(tid, spec_, params, caps) for tid, _, spec_, params in checks
    ]
    entry_questions = None
    if entry.get("out_col_order") is not None:
        entry_questions = _scan_one(name, G, caps)["questions"]
    return {"group": entry, "checks": reports, "questions": entry_questions}


def catalog_run(
    max_order: int = 300, jobs: int = 1, caps: Caps | None = None
) -> dict:
    """Run the invariant battery, stock checks and question scan per group."""
    caps = caps or default_caps()
    checks = standard_checks(max_order)
    by_group: dict[str, list] = {}
    for row in checks:
        by_group.setdefault(row[1], []).append(row)
    tasks = []
    for name, spec in standard_catalog(max_order):
        tasks.append((name, spec, by_group.get(name, []), caps))
    for name in by_group:
        if name == "HolA5" and all(t[0] != "HolA5" for t in tasks):
            spec = by_group[name][0][2]
            tasks.append((name, spec, by_group[name], caps))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_catalog_worker, tasks))
    else:
        results = [_catalog_worker(t) for t in tasks]
    results.sort(key=lambda r: r["group"]["name"])
    all_reports = [r for res in results for r in res["checks"]]
    counterexamples = []
    for res in results:
        for q in res["questions"] or []:
            if q["status"] == "counterexample":
                counterexamples.append({"group": res["group"]["name"], **q})
    statuses = [r["status"] for r in all_reports]
    summary = {
        "groups": len(results),
        "checks": len(all_reports),
        "checks_passed": statuses.count("passed"),
        "checks_not_applicable": statuses.count("not-applicable"),
        "checks_incomplete": statuses.count("incomplete"),
        "contradictions": statuses.count("contradiction"),
        "question_counterexamples": len(counterexamples),
        "invariant_violations": sum(
            1
            for res in results
            if res["group"].get("prime_divisor_bound") is False
            or res["group"].get("normal_invariance") is False
        ),
    }
    return {
        "max_order": max_order,
        "groups": [r["group"] for r in results],
        "checks": all_reports,
        "question_counterexamples": counterexamples,
        "summary": summary,
    }
