"""Command-line front end.

All commands exit 0 on success, 1 on a domain error (bad mathematical
input), and 2 on a usage error.  Numeric output uses fixed decimal
notation controlled by --digits, so identical invocations are
byte-identical.
"""

import json
import sys
from functools import wraps

import click

from .errors import BetaHoleError, OutOfRange
from .sequences import EpSequence, is_admissible, lex_compare_ep
from .numeric import BetaSpec, to_iv, iv_mid, mp
from .survivor import PointSpec, dimension
from . import words as W
from . import bifurcation as B
from . import critical as C
from . import numeric as N


def domain_errors(f):
    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (BetaHoleError, ValueError, AssertionError) as e:
            click.echo("error: %s" % e, err=True)
            sys.exit(1)
    return wrapper


def _fmt(x, digits):
    return ("%%.%df" % digits) % x


@click.group()
def main():
    """Beta-expansions, survivor sets and the Farey bifurcation atlas."""


@main.command()
@click.option("--x", required=True, help="point in [0,1] (decimal)")
@click.option("--beta", "beta_s", required=True,
              help='base: decimal or "@PRE(PER)"')
@click.option("--n", default=24, show_default=True)
@click.option("--mode", type=click.Choice(["greedy", "quasi"]),
              default="greedy", show_default=True)
@domain_errors
def expand(x, beta_s, n, mode):
    """Digits of the (quasi-)greedy expansion of x in base beta."""
    beta = BetaSpec.parse(beta_s)
    xv = to_iv(x)
    if mode == "greedy":
        if not (xv.a >= 0 and xv.b < 1):
            raise OutOfRange("greedy expansion needs x in [0,1)")
        digits, cert = N.greedy_digits(xv, beta.value, n)
    else:
        if not (xv.a > 0 and xv.b <= 1):
            raise OutOfRange("quasi-greedy expansion needs x in (0,1]")
        if xv.a == 1 and xv.b == 1:
            digits, cert = beta.alpha_prefix(n)
        else:
            digits, cert = N.quasi_greedy_digits(xv, beta.value, n)
    click.echo(digits)
    if not cert:
        click.echo("certified to %d of %d digits" % (len(digits), n),
                   err=True)


@main.command()
@click.option("--beta", "beta_s", required=True)
@click.option("--n", default=48, show_default=True)
@domain_errors
def alpha(beta_s, n):
    """Expansion of 1 in base beta; reports a closed form if one is found."""
    beta = BetaSpec.parse(beta_s)
    seq = beta.alpha_sequence(n)
    if seq is not None:
        click.echo("%s = %s..." % (seq, seq.prefix(min(n, 24))))
    else:
        digits, _ = beta.alpha_prefix(n)
        click.echo(digits)


@main.command("solve-beta")
@click.option("--alpha", "alpha_s", required=True, help='"PRE(PER)"')
@click.option("--digits", default=12, show_default=True)
@domain_errors
def solve_beta(alpha_s, digits):
    """Base whose expansion of 1 equals the given sequence."""
    b = N.beta_from_alpha(EpSequence.parse(alpha_s))
    click.echo(_fmt(float(mp.mpf(iv_mid(b))), digits))


@main.command()
@click.option("--x", "x_s", required=True, help='sequence "PRE(PER)"')
@click.option("--alpha", "alpha_s", default=None, help='"PRE(PER)"')
@click.option("--beta", "beta_s", default=None)
@domain_errors
def admissible(x_s, alpha_s, beta_s):
    """Parry admissibility of a sequence (all shifts strictly below alpha)."""
    if (alpha_s is None) == (beta_s is None):
        raise click.UsageError("give exactly one of --alpha / --beta")
    if alpha_s is not None:
        a = EpSequence.parse(alpha_s)
    else:
        a = BetaSpec.parse(beta_s).alpha_sequence()
        if a is None:
            raise BetaHoleError("no closed form for alpha at this base")
    x = EpSequence.parse(x_s)
    click.echo("true" if is_admissible(x, a) else "false")


@main.command()
@click.option("--level", type=int, default=None)
@click.option("--check", default=None, help="word to test for membership")
@domain_errors
def farey(level, check):
    """Farey word families: list a level, or test one word."""
    if (level is None) == (check is None):
        raise click.UsageError("give exactly one of --level / --check")
    if level is not None:
        click.echo(",".join(W.farey_level(level)))
    else:
        click.echo("true" if W.is_farey(check) else "false")


@main.command()
@click.option("--word", required=True)
@domain_errors
def factorize(word):
    """Standard factorization of a non-degenerate Farey word."""
    u, v = W.standard_factorization(word)
    click.echo("%s %s" % (u, v))


@main.command()
@click.option("--max-len", type=int, required=True)
@click.option("--kind", type=click.Choice(["farey", "all"]), default="all",
              show_default=True)
@click.option("--digits", default=12, show_default=True)
@click.option("--nesting/--no-nesting", default=True, show_default=True)
@domain_errors
def atlas(max_len, kind, digits, nesting):
    """JSON atlas of basic/Farey parameter intervals up to a generator length."""
    if max_len > 12 or max_len < 2:
        raise click.UsageError("--max-len must be in [2, 12]")
    recs = B.atlas(max_len, kind)
    doc = {"intervals": B.atlas_json(recs, digits)}
    if nesting:
        rel = []
        for i in range(len(recs)):
            for j in range(i + 1, len(recs)):
                r = B.nesting_relation(recs[i], recs[j])
                if r != "disjoint":
                    rel.append({"first": recs[i].generator,
                                "second": recs[j].generator,
                                "relation": r})
        doc["nesting"] = rel
    click.echo(json.dumps(doc, indent=2))


@main.command()
@click.option("--beta", "beta_s", required=True)
@click.option("--t-min", type=float, default=0.0, show_default=True)
@click.option("--t-max", type=float, required=True)
@click.option("--samples", type=int, required=True)
@click.option("--n-max", type=int, default=14, show_default=True)
@click.option("--digits", default=12, show_default=True)
@click.option("--horizon", default=N.DEFAULT_HORIZON, show_default=True)
@domain_errors
def staircase(beta_s, t_min, t_max, samples, n_max, digits, horizon):
    """CSV sweep of entropy/dimension brackets over a grid of hole sizes."""
    if samples < 2:
        raise click.UsageError("--samples must be >= 2")
    if not (0 <= t_min < t_max <= 1):
        raise click.UsageError("need 0 <= t-min < t-max <= 1")
    beta = BetaSpec.parse(beta_s)
    click.echo("t,h_lower,h_upper,dim_lower,dim_upper,method")
    for i in range(samples):
        t = t_min + (t_max - t_min) * i / (samples - 1)
        rep = dimension(beta, PointSpec(value=t), horizon=horizon)
        click.echo(",".join([
            _fmt(t, digits),
            _fmt(rep.h_lower, digits), _fmt(rep.h_upper, digits),
            _fmt(rep.dim_lower, digits), _fmt(rep.dim_upper, digits),
            rep.method,
        ]))


@main.command()
@click.option("--beta", "beta_s", required=True)
@click.option("--atlas-depth", type=int, default=10, show_default=True)
@click.option("--digits", default=12, show_default=True)
@domain_errors
def tau(beta_s, atlas_depth, digits):
    """Critical hole size report (regime plus certified bracket), as JSON."""
    beta = BetaSpec.parse(beta_s)
    rep = C.tau_report(beta, atlas_depth)
    click.echo(json.dumps(C.tau_json(rep, digits), indent=2))


@main.command()
@click.option("--word", required=True, help="Lyndon period of t")
@click.option("--beta", "beta_s", required=True)
@domain_errors
def isolated(word, beta_s):
    """Classify whether the periodic point (word)^inf is isolated in E+."""
    beta = BetaSpec.parse(beta_s)
    click.echo(json.dumps(
        {"word": word, "classification": B.classify_isolated(word, beta)}))


@main.command()
@click.option("--word", required=True, help="generator a")
@domain_errors
def zset(word):
    """Enumerate the finite two-sided-bounded set attached to a generator."""
    members = C.z_set(word)
    click.echo(json.dumps({"word": word,
                           "cardinality": len(members),
                           "members": [str(x) for x in members]}))


@main.command()
@click.option("--t", "t_s", required=True, help='sequence "PRE(PER)"')
@click.option("--beta", "beta_s", required=True)
@domain_errors
def classify(t_s, beta_s):
    """Bifurcation-set membership of a hole endpoint given symbolically."""
    beta = BetaSpec.parse(beta_s)
    a = beta.alpha_sequence()
    if a is None:
        raise BetaHoleError("no closed form for alpha at this base; "
                            "give beta as @PRE(PER)")
    t = EpSequence.parse(t_s)
    click.echo(json.dumps({
        "t": str(t),
        "in_E_plus": B.in_E_plus(t, a),
        "in_E_zero": B.in_E_zero(t, a),
    }))


if __name__ == "__main__":
    main()
