"""Command-line front end: construct, dump and verify.

Exit status: 0 when every requested check passes, 2 when a check fails,
1 on a usage error.  JSON output is versioned, keys are sorted and integers
are written as decimal strings.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, combinat
from .exact_linalg import field_from

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------ JSON helpers

def stringify(x):
    """Recursively turn ints into decimal strings (bools and None stay)."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: stringify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [stringify(v) for v in x]
    return str(x)


def dumps(payload: dict) -> str:
    body = {"schema": SCHEMA, **payload}
    return json.dumps(stringify(body), sort_keys=True, indent=2)


def parse_weight(text: str, n: int, ell: int):
    """'2,1|0,1' -> ((2,1),(0,1)); components separated by '|', padded to n."""
    parts = text.split("|")
    if len(parts) != ell + 1:
        raise UsageError(f"weight needs {ell + 1} components separated by '|'")
    out = []
    for p in parts:
        xs = [int(x) for x in p.split(",") if x.strip()] if p.strip() else []
        if len(xs) > n or any(x < 0 for x in xs):
            raise UsageError(f"bad component {p!r}")
        out.append(tuple(xs + [0] * (n - len(xs))))
    return tuple(out)


def parse_partition(text: str):
    xs = [int(x) for x in text.split(",") if x.strip()]
    if any(x < 0 for x in xs) or any(xs[k] < xs[k + 1] for k in range(len(xs) - 1)):
        raise UsageError(f"not a partition: {text!r}")
    return tuple(xs)


def wstr(w) -> str:
    return "|".join(",".join(map(str, c)) for c in w)


# ------------------------------------------------------------ cache

def _cache_path(key: dict):
    root = os.environ.get("ZZSCHUR_CACHE_DIR")
    if not root:
        return None
    h = hashlib.sha256(json.dumps({"v": __version__, **key}, sort_keys=True).encode()).hexdigest()
    return os.path.join(root, h[:2], h + ".json")


def cached(key: dict, compute):
    """Memoize a JSON-ready result under ZZSCHUR_CACHE_DIR (content-addressed by the key)."""
    path = _cache_path(key)
    if path and os.path.exists(path):
        with open(path) as fh:
            return json.load(fh)
    res = compute()
    if path:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(res, fh, sort_keys=True)
        os.replace(tmp, path)
    return res


# ------------------------------------------------------------ checks (top level so they pickle)

def check_heredity(ell: int) -> dict:
    from .superalg import heredity_audit, zigzag
    rep = heredity_audit(zigzag(ell))
    return {"check": "heredity", "ell": ell, "ok": rep.ok, "checks": rep.as_dict()}


def check_lzprime(ell: int) -> dict:
    from .tilting_core import ringel_dual_zigzag
    Zp, T, rep = ringel_dual_zigzag(ell)
    return {"check": "lzprime", "ell": ell, "ok": rep.ok, "dim_end": list(rep.dim_end),
            "primed_basis_size": Zp.dim, "expected": 4 * ell + 1,
            "independent": rep.independent, "in_end": rep.in_end,
            "mismatches": [str(m) for m in rep.mismatches]}


def check_tilting(n: int, d: int, ell: int) -> dict:
    from .ringel_verify import tilt_weight_audit
    from .tilting_core import tilting_audit, tilting_bimodule
    base = tilting_audit(tilting_bimodule(ell))
    out = {"check": "tilting", "n": n, "d": d, "ell": ell, "base": base.as_dict()}
    ok = base.ok
    for i in range(ell + 1):
        rep = tilt_weight_audit(n, d, ell, i)
        out[f"summand_{i}"] = rep.as_dict()
        ok = ok and rep.ok
    out["ok"] = ok
    return out


def check_kostka(n: int, d: int, ell: int, field: str) -> dict:
    from .ringel_verify import kostka_audit
    rep = kostka_audit(n, d, ell, field)
    return {"check": "kostka", "n": n, "d": d, "ell": ell, "ok": rep.ok, "checks": rep.as_dict()}


def check_ringel(n: int, d: int, ell: int, field: str) -> dict:
    from .ringel_verify import verify_ringel
    out = verify_ringel(n, d, ell, field)
    out = {k: v for k, v in out.items() if k not in ("seconds",)}
    out["end"] = {k: v for k, v in out["end"].items() if k != "seconds"}
    out["check"] = "ringel"
    return out


def _run_check(name: str, args: tuple) -> dict:
    fn = {"heredity": check_heredity, "lzprime": check_lzprime, "tilting": check_tilting,
          "kostka": check_kostka, "ringel": check_ringel}[name]
    key = {"check": name, "args": list(args)}
    return cached(key, lambda: fn(*args))


def run_checks(jobs: list, workers: int) -> list:
    """Run (name, args) jobs, optionally in parallel; results keep the job order."""
    if workers <= 1 or len(jobs) <= 1:
        return [_run_check(n, a) for n, a in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        futs = [ex.submit(_run_check, n, a) for n, a in jobs]
        return [f.result() for f in futs]


# ------------------------------------------------------------ commands

def _need(args, *names):
    for k in names:
        if getattr(args, k) is None:
            raise UsageError(f"missing -{k[0]}")


def _verify_params(args):
    _need(args, "n", "d", "ell")
    if args.ell < 1:
        raise UsageError("ell must be at least 1")
    if not 0 <= args.d <= args.n:
        raise UsageError("verify commands need n >= d >= 0")


def cmd_dim(args):
    from .ringel_verify import build_scrT
    from .schur import schur_algebra
    from .superalg import zigzag
    _need(args, "n", "d", "ell")
    Z = zigzag(args.ell)
    S = schur_algebra(Z, args.n, args.d)
    even = sum(1 for p in S.parity if p == 0)
    res = {"command": "dim", "n": args.n, "d": args.d, "ell": args.ell,
           "dim": S.dim, "even": even, "odd": S.dim - even, "dim_Z": Z.dim}
    if args.d <= args.n:
        res["dim_tilting_bimodule"] = build_scrT(args.n, args.d, args.ell).dim
    return res, True, str(S.dim)


def cmd_basis(args):
    from .schur import basis_to_json, schur_algebra
    from .superalg import zigzag
    _need(args, "n", "d", "ell")
    S = schur_algebra(zigzag(args.ell), args.n, args.d)
    data = json.loads(basis_to_json(S))
    data.pop("schema", None)
    text = "\n".join(f"{k}\t{S.names[k]}\t{S.parity[k]}" for k in range(S.dim))
    return {"command": "basis", **data}, True, text


def cmd_mult(args):
    from .schur import schur_algebra
    from .superalg import zigzag
    _need(args, "n", "d", "ell")
    S = schur_algebra(zigzag(args.ell), args.n, args.d)
    ids = []
    for tok in (args.x, args.y):
        if tok.isdigit():
            k = int(tok)
        else:
            try:
                k = S.index(tok)
            except (KeyError, ValueError):
                raise UsageError(f"unknown basis element {tok!r}")
        if not 0 <= k < S.dim:
            raise UsageError(f"basis position {k} out of range")
        ids.append(k)
    prod = S.mul(*ids)
    terms = {S.names[k]: c for k, c in sorted(prod.items())}
    text = " + ".join(f"{c}*{nm}" for nm, c in terms.items()) or "0"
    return {"command": "mult", "x": S.names[ids[0]], "y": S.names[ids[1]], "product": terms}, True, text


def cmd_kostka(args):
    from .superalg import zigzag
    _need(args, "n", "d", "ell")
    alph = combinat.zigzag_alphabet(zigzag(args.ell), args.n)
    lams = combinat.dominant_weights(args.n, args.d, args.ell)
    mus = combinat.all_weights(args.n, args.d, args.ell)
    rows = []
    for l in lams:
        row = {wstr(m): combinat.kostka(l, m, alph) for m in mus}
        rows.append({"lambda": wstr(l), "k": {k: v for k, v in row.items() if v}})
    total = sum(sum(r["k"].values()) ** 2 for r in rows)
    text = "\n".join(f"{r['lambda']}: " + " ".join(f"{m}:{v}" for m, v in r["k"].items()) for r in rows)
    text += f"\nsum of squared row sums: {total}"
    return {"command": "kostka", "n": args.n, "d": args.d, "ell": args.ell, "rows": rows,
            "sum_k_squared": total}, True, text


def cmd_lr(args):
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    size = sum(mu) + sum(nu)
    table = {}
    for lam in combinat.partitions(size, size):
        c = combinat.lr_coeff(mu, nu, lam)
        if c:
            table[",".join(str(x) for x in lam if x)] = c
    text = "\n".join(f"{k}: {v}" for k, v in table.items())
    return {"command": "lr", "mu": list(mu), "nu": list(nu), "coefficients": table}, True, text


def cmd_char_delta(args):
    from .superalg import zigzag
    _need(args, "n", "d", "ell")
    lam = parse_weight(args.weight, args.n, args.ell)
    if sum(map(sum, lam)) != args.d:
        raise UsageError("weight size does not match -d")
    if not combinat.is_dominant(lam):
        raise UsageError("weight is not dominant")
    if args.d > args.n:
        raise UsageError("standard characters need d <= n")
    ch = combinat.delta_character(lam, combinat.zigzag_alphabet(zigzag(args.ell), args.n))
    terms = {wstr(m): v for m, v in sorted(ch.items())}
    text = "\n".join(f"{k}: {v}" for k, v in terms.items())
    return {"command": "char-delta", "weight": wstr(lam), "character": terms,
            "dim": sum(ch.values())}, True, text


def _summary(results) -> str:
    lines = []
    for r in results:
        tag = "PASS" if r.get("ok") else "FAIL"
        params = " ".join(f"{k}={r[k]}" for k in ("n", "d", "ell", "field") if k in r)
        extra = ""
        if r.get("check") == "ringel":
            extra = f" end={r['end']['total']} (even {r['end']['even']}, odd {r['end']['odd']})"
        lines.append(f"{tag} {r['check']} {params}{extra}".rstrip())
    return "\n".join(lines)


def cmd_verify(args):
    what = args.what
    F = field_from(args.field).name
    if what in ("heredity", "lzprime"):
        _need(args, "ell")
        if args.ell < 1:
            raise UsageError("ell must be at least 1")
        jobs = [(what, (args.ell,))]
    elif what == "tilting":
        _verify_params(args)
        jobs = [(what, (args.n, args.d, args.ell))]
    else:
        _verify_params(args)
        jobs = [(what, (args.n, args.d, args.ell, F))]
    results = run_checks(jobs, args.jobs)
    ok = all(r["ok"] for r in results)
    payload = results[0] if len(results) == 1 else {"results": results}
    return {"command": f"verify {what}", **payload}, ok, _summary(results)


def cmd_report(args):
    _verify_params(args)
    F = field_from(args.field).name
    n, d, ell = args.n, args.d, args.ell
    jobs = [("heredity", (ell,)), ("lzprime", (ell,)), ("tilting", (n, d, ell)),
            ("kostka", (n, d, ell, F)), ("ringel", (n, d, ell, F))]
    results = run_checks(jobs, args.jobs)
    ok = all(r["ok"] for r in results)
    return {"command": "report", "ok": ok, "results": results}, ok, _summary(results)


COMMANDS = {"dim": cmd_dim, "basis": cmd_basis, "mult": cmd_mult, "kostka": cmd_kostka,
            "lr": cmd_lr, "char-delta": cmd_char_delta, "verify": cmd_verify, "report": cmd_report}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-n", type=int, help="matrix size")
    common.add_argument("-d", type=int, help="degree")
    common.add_argument("-l", dest="ell", type=int, help="number of zigzag vertices minus one")
    common.add_argument("-F", dest="field", default="Q", help="Q or F<p>")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", metavar="PATH", help="write output to PATH")
    common.add_argument("--jobs", type=int, default=1, help="parallel workers for independent checks")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="zzschur", description="Extended zigzag Schur algebras and their tilting bimodule.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("dim", parents=[common], help="algebra and module dimensions")
    sub.add_parser("basis", parents=[common], help="dump the eta basis")
    m = sub.add_parser("mult", parents=[common], help="product of two basis elements")
    m.add_argument("x", help="basis position or name")
    m.add_argument("y", help="basis position or name")
    sub.add_parser("kostka", parents=[common], help="Kostka matrix")
    lr = sub.add_parser("lr", parents=[common], help="LR coefficients c^lambda_{mu,nu}")
    lr.add_argument("mu", help="partition, e.g. 2,1")
    lr.add_argument("nu", help="partition")
    cd = sub.add_parser("char-delta", parents=[common], help="character of a standard module")
    cd.add_argument("weight", help="multipartition, components split by '|', e.g. '1,1|0'")
    v = sub.add_parser("verify", parents=[common], help="run one audit")
    v.add_argument("what", choices=["heredity", "lzprime", "tilting", "kostka", "ringel"])
    sub.add_parser("report", parents=[common], help="run every audit")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("no command given")
        for k in ("n", "d"):
            x = getattr(args, k, None)
            if x is not None and x < (1 if k == "n" else 0):
                raise UsageError(f"-{k} out of range")
        if getattr(args, "ell", None) is not None and args.ell < 1:
            raise UsageError("ell must be at least 1")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        try:
            field_from(args.field)
        except ValueError as e:
            raise UsageError(str(e))
        payload, ok, text = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"zzschur: usage error: {e}", file=stderr)
        return 1
    out = dumps(payload) if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out, file=stdout)
    if not ok:
        print(dumps({"failed": payload}) if args.json else "checks failed:\n" + text, file=stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
