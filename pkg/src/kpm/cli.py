"""Command-line front end.

Exit status: 0 on success, 1 when a predicate subcommand answers negatively,
2 on malformed input or usage errors. Reports are plain ``key: value`` lines
and every report carries an ``anchor:`` line naming the statement it checks.
"""
import argparse
import json
import os
import sys

from . import actions, io, lattice, monad, schubert
from .core.factorizations import birkhoff
from .errors import (
    DegenerateDataError,
    GeneratorExhaustedError,
    InvalidDataError,
    KPMError,
    MalformedInputError,
    SingularInputError,
    TruncationTooSmallError,
)

DEFAULT_TRUNCATION = 16
MIN_TRUNCATION = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _truncation(args):
    n = args.truncation
    if n is None:
        env = os.environ.get("KPM_TRUNCATION")
        try:
            n = int(env) if env else DEFAULT_TRUNCATION
        except ValueError:
            raise MalformedInputError(f"KPM_TRUNCATION must be an integer, got {env!r}")
    if n < MIN_TRUNCATION:
        raise MalformedInputError(f"truncation must be at least {MIN_TRUNCATION}")
    return n


def _fmt_vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _emit(out, key, value):
    out.append(f"{key}: {value}")


def _emit_matrix(out, key, m):
    out.append(f"{key}:")
    out.extend("  " + line for line in m.pretty().splitlines())


# schubert -----------------------------------------------------------------------------

def cmd_schubert_product(args, out):
    prod = schubert.eps_product(args.i, args.j)
    _emit(out, "anchor", "divided-power Schubert product eps_i*eps_j = C(i+j,i) eps_(i+j)")
    _emit(out, "product", f"eps_{args.i} * eps_{args.j} = {prod}")
    return 0


def cmd_schubert_degree(args, out):
    pb = schubert.p3_pullback(args.d)
    _emit(out, "anchor", "degree of a based map P^3 -> affine Grassmannian is divisible by 6")
    if isinstance(pb, schubert.Obstruction):
        out.append(f"admissible: false ({pb})")
        return 1
    c, e = pb.images[1].coeffs[2], pb.images[2].coeffs[3]
    out.append(f"admissible: true (c={c}, e={e})")
    return 0


# lattice / birkhoff ----------------------------------------------------------------------

def cmd_lattice_index(args, out):
    lat = lattice.lattice_from_group(io.load_loop_matrix(args.file))
    k1, k2 = lat.invariant_factors
    _emit(out, "anchor", "lattice g L0 and its invariant factors over C[[t]]")
    _emit(out, "invariant_factors", f"({k1}, {k2})")
    _emit(out, "index", lattice.lattice_index(lat))
    return 0


def cmd_lattice_member(args, out):
    lat = lattice.lattice_from_group(io.load_loop_matrix(args.file))
    rep = lattice.inclusion_report(lat, args.d)
    member = lattice.in_Ld(lat, args.d)
    _emit(out, "anchor", "L_d: t^d L0 in L in t^-d L0 with dim L/t^d L0 = 2d")
    _emit(out, "lower_inclusion", str(rep.lower).lower())
    _emit(out, "upper_inclusion", str(rep.upper).lower())
    _emit(out, "member", str(member).lower())
    return 0 if member else 1


def cmd_lattice_splitting(args, out):
    g = io.load_loop_matrix(args.file)
    n = lattice.splitting_type_p1(g, _truncation(args))
    _emit(out, "anchor", "V_g splits as O(n) + O(-n); Birkhoff and section counts agree")
    _emit(out, "splitting_type", n)
    return 0


def cmd_birkhoff(args, out):
    g = lattice.as_loop_matrix(io.load_loop_matrix(args.file))
    fac = birkhoff(g, _truncation(args))
    _emit(out, "anchor", "Birkhoff factorization g = g_minus diag(t^n, t^-n) g_plus")
    _emit(out, "n", fac.n)
    _emit_matrix(out, "g_minus", fac.g_minus)
    _emit_matrix(out, "D", fac.D)
    _emit_matrix(out, "g_plus", fac.g_plus)
    return 0


# monad ---------------------------------------------------------------------------------

def _fmt_witness(w):
    return f"lam={w.lam}, mu={w.mu}, v={_fmt_vec(w.v)}"


def cmd_monad_check(args, out):
    data = io.load_adhm(args.file)
    if not monad.validate(data):
        out.append("adhm-relation: failed; nondegenerate: n/a")
        return 1
    rep = monad.nondegeneracy_report(data)
    out.append(f"adhm-relation: ok; nondegenerate: {str(bool(rep)).lower()}")
    _emit(out, "anchor", "A_Z injective and B_Z surjective for all Z != 0")
    if rep.injectivity_witness:
        _emit(out, "injectivity_witness", _fmt_witness(rep.injectivity_witness))
    if rep.surjectivity_witness:
        _emit(out, "surjectivity_witness", _fmt_witness(rep.surjectivity_witness))
    return 0 if rep else 1


def cmd_monad_fiber(args, out):
    data = io.load_adhm(args.file)
    z = io.parse_vector(args.point)
    f = monad.fiber(data, z)
    _emit(out, "anchor", "fiber Ker B_Z / Im A_Z")
    _emit(out, "point", _fmt_vec(f.point))
    _emit(out, "kernel_dim", len(f.kernel))
    _emit(out, "image_dim", len(f.image))
    for k, v in enumerate(f.reps, 1):
        _emit(out, f"rep{k}", _fmt_vec(v))
    return 0


def cmd_monad_line(args, out):
    data = io.load_adhm(args.file)
    p, q = io.parse_vector(args.p), io.parse_vector(args.q)
    g = monad.transition_on_line(data, p, q)
    n = monad.splitting_on_line(data, p, q)
    _emit(out, "anchor", "restriction to a line splits as O(n) + O(-n); trivial on generic lines")
    _emit_matrix(out, "transition", g)
    _emit(out, "splitting_type", n)
    return 0


def _parse_grid(args):
    if args.lines:
        return [io.parse_vector(s) for s in args.lines.split(";")]
    if args.grid < 1:
        raise MalformedInputError("scan grid must be nonempty")
    return monad.dual_grid(args.grid)


def cmd_monad_scan(args, out):
    data = io.load_adhm(args.file)
    rep = monad.jumping_line_scan(data, _parse_grid(args))
    if args.table:
        out.append("line\tn\terror")
        for e in rep.entries:
            out.append(f"{_fmt_vec(e.line)}\t{'' if e.n is None else e.n}\t{e.error or ''}")
        return 0
    _emit(out, "anchor", "jumping lines: splitting type n >= 1 on special lines")
    _emit(out, "lines", len(rep.entries))
    for n, count in rep.histogram.items():
        _emit(out, f"n={n}", count)
    _emit(out, "errors", sum(1 for e in rep.entries if e.error))
    for e in rep.jumping:
        _emit(out, "jumping", f"{_fmt_vec(e.line)} n={e.n}")
    return 0


def cmd_monad_random(args, out):
    data = monad.random_adhm(args.d, args.seed, nondegenerate_only=args.nondegenerate)
    out.append(io.dumps(io.adhm_to_json(data)))
    return 0


# actions --------------------------------------------------------------------------------

def _parse_group(text, d):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"group element must be a JSON matrix ({exc.msg})") from exc
    if d == 0:
        return actions.Matrix.zeros(0, 0)
    return io.parse_matrix(obj, "g")


def cmd_act_gl(args, out):
    data = io.load_adhm(args.file)
    g = _parse_group(args.g, data.d)
    out.append(io.dumps(io.adhm_to_json(actions.gl_act(g, data))))
    return 0


def cmd_act_cstar(args, out):
    data = io.load_adhm(args.file)
    z = io.parse_rational(args.z)
    out.append(io.dumps(io.adhm_to_json(actions.cstar_act(z, data))))
    return 0


def cmd_act_equiv(args, out):
    x, y = io.load_adhm(args.x), io.load_adhm(args.y)
    res = actions.gl_equivalent(x, y, trials=args.trials)
    _emit(out, "anchor", "GL(d) orbits of ADHM data are the points of the moduli space")
    _emit(out, "status", res.status)
    _emit(out, "solution_dim", res.solution_dim)
    if res.g is not None:
        _emit_matrix(out, "g", res.g)
    return 0 if res else 1


def cmd_act_verify(args, out):
    data = io.load_adhm(args.file)
    z = io.parse_rational(args.z)
    point = io.parse_vector(args.point)
    chk = actions.verify_cstar_equivariance(data, z, point)
    _emit(out, "anchor", "C* acts on ADHM data by z.(alpha, beta, a, b) = (z alpha, beta, z a, b)")
    _emit(out, "basis_change", "diag(I_d, z^-1 I_d, I_2)")
    _emit(out, "symbolic", str(chk.symbolic).lower())
    _emit(out, "kernel", str(chk.kernel).lower())
    _emit(out, "image", str(chk.image).lower())
    _emit(out, "fiber_dims", f"{chk.fiber_dims[0]}, {chk.fiber_dims[1]}")
    _emit(out, "verified", str(chk.ok).lower())
    return 0 if chk else 1


def cmd_act_pi(args, out):
    x = io.parse_vector(args.x)
    lm = io.parse_vector(args.lm)
    if len(lm) != 2:
        raise MalformedInputError("[lam : mu] needs two coordinates")
    _emit(out, "anchor", "pi(x, [lam : mu]) = [lam x : mu]")
    _emit(out, "image", "[" + " : ".join(str(c) for c in actions.pi_map(x, lm)) + "]")
    return 0


# parser ----------------------------------------------------------------------------------

def _add_trunc(p):
    p.add_argument("--truncation", "-N", type=int, default=None,
                   help=f"truncation order (default {DEFAULT_TRUNCATION} or $KPM_TRUNCATION)")


def build_parser():
    parser = _Parser(prog="kpm", description="Exact computations with ADHM data, monads on P^2 "
                                             "and the SL(2) affine Grassmannian.")
    top = parser.add_subparsers(dest="group", parser_class=_Parser)
    top.required = True

    sch = top.add_parser("schubert").add_subparsers(dest="cmd", parser_class=_Parser)
    sch.required = True
    p = sch.add_parser("product", help="eps_i * eps_j")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_schubert_product)
    p = sch.add_parser("degree-check", help="can eps_1 -> d h extend to a ring map into H*(P^3)?")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_schubert_degree)

    lat = top.add_parser("lattice").add_subparsers(dest="cmd", parser_class=_Parser)
    lat.required = True
    p = lat.add_parser("index", help="invariant factors and index of g L0")
    p.add_argument("file")
    p.set_defaults(func=cmd_lattice_index)
    p = lat.add_parser("member", help="is g L0 in L_d?")
    p.add_argument("file")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_lattice_member)
    p = lat.add_parser("splitting", help="splitting type of V_g on P^1")
    p.add_argument("file")
    _add_trunc(p)
    p.set_defaults(func=cmd_lattice_splitting)

    p = top.add_parser("birkhoff", help="Birkhoff factorization of a loop matrix")
    p.add_argument("file")
    _add_trunc(p)
    p.set_defaults(func=cmd_birkhoff)

    mon = top.add_parser("monad").add_subparsers(dest="cmd", parser_class=_Parser)
    mon.required = True
    p = mon.add_parser("check", help="ADHM relation and nondegeneracy")
    p.add_argument("file")
    p.set_defaults(func=cmd_monad_check)
    p = mon.add_parser("fiber", help="fiber at a point of P^2")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="homogeneous coordinates, e.g. 1,0,1/2")
    p.set_defaults(func=cmd_monad_fiber)
    p = mon.add_parser("line", help="transition matrix and splitting type on a line")
    p.add_argument("file")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_monad_line)
    p = mon.add_parser("scan", help="splitting types over a grid of lines")
    p.add_argument("file")
    p.add_argument("--grid", type=int, default=20, help="lines p*lam + mu + q*nu = 0, size x size")
    p.add_argument("--lines", default=None, help="explicit dual vectors, e.g. '1,1,0;0,1,2'")
    p.add_argument("--table", action="store_true", help="tab-separated output")
    p.set_defaults(func=cmd_monad_scan)
    p = mon.add_parser("random", help="seeded random ADHM data (JSON)")
    p.add_argument("d", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nondegenerate", action="store_true")
    p.set_defaults(func=cmd_monad_random)

    act = top.add_parser("act").add_subparsers(dest="cmd", parser_class=_Parser)
    act.required = True
    p = act.add_parser("gl", help="apply g in GL(d)")
    p.add_argument("file")
    p.add_argument("--g", required=True, help="JSON matrix, e.g. '[[2,0],[0,1]]'")
    p.set_defaults(func=cmd_act_gl)
    p = act.add_parser("cstar", help="apply z in C*")
    p.add_argument("file")
    p.add_argument("--z", required=True)
    p.set_defaults(func=cmd_act_cstar)
    p = act.add_parser("equiv", help="search g with gl_act(g, x) = y")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_act_equiv)
    p = act.add_parser("verify-l42", aliases=["verify-equivariance"],
                       help="check C*-equivariance of the fiber at a point")
    p.add_argument("file")
    p.add_argument("--z", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_act_verify)
    p = act.add_parser("pi", help="pi(x, [lam : mu]) in P^3")
    p.add_argument("--x", required=True)
    p.add_argument("--lm", required=True)
    p.set_defaults(func=cmd_act_pi)
    return parser


def dispatch(argv):
    """Run a command; returns ``(status, report_text)``."""
    parser = build_parser()
    out = []
    try:
        args = parser.parse_args(argv)
        status = args.func(args, out)
    except UsageError as exc:
        return 2, f"error: {exc}\n{parser.format_usage()}"
    except (MalformedInputError, InvalidDataError, SingularInputError,
            TruncationTooSmallError) as exc:
        return 2, f"error: {exc}\n"
    except (DegenerateDataError, GeneratorExhaustedError) as exc:
        return 1, f"error: {exc}\n"
    except KPMError as exc:
        return 2, f"error: {exc}\n"
    return status, "\n".join(out) + "\n"


def main(argv=None):
    status, text = dispatch(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status != 2 else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
