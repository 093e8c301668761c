#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command line front end.

Basic usage::

    mirtoolkit classify --in f.json
    mirtoolkit verify census --case complex --eigen 0,1,2
    mirtoolkit oracle compare --n 2 --p 3

Exit status is 0 when every checked claim holds, 1 when one fails and 2 on
a usage error.
"""

from __future__ import print_function

import os
import sys
import argparse
import contextlib

try:  # run as a package if installed
    from mirtoolkit import configs
    from mirtoolkit.exactalg import Field, RAT, GAUSS, field_from_string
    from mirtoolkit.liecore import moment_map
    from mirtoolkit.orbitclass import classify
    from mirtoolkit import catalog
    from mirtoolkit import fforacle
    from mirtoolkit import fileio
    from mirtoolkit.utils import Report
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    import configs
    from exactalg import Field, RAT, GAUSS, field_from_string
    from liecore import moment_map
    from orbitclass import classify
    import catalog
    import fforacle
    import fileio
    from utils import Report

SUB_VERBS = {'classify': (None,),
             'catalog': ('open', 'selector'),
             'verify': ('open', 'census', 'stabilizers', 'fiber', 'mackey',
                        'lemmas', 'consistency'),
             'oracle': ('partition', 'compare', 'torus', 'cosets',
                        'strata')}

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_FIBER_PRIMES = '7,11'
MACKEY_MAX_N = 10


class UsageError(ValueError):
    """ Flags are missing or inconsistent """


def get_args(*args):
    """ Parse command line arguments"""

    # parse arguments
    parser = argparse.ArgumentParser(
        prog='mirtoolkit',
        description="Coadjoint orbits of the mirabolic subgroup")
    parser.add_argument("verb", choices=sorted(SUB_VERBS))
    parser.add_argument("sub", nargs='?', default=None)
    parser.add_argument("--field", help="rat, gauss or fp:<p>", default=None)
    parser.add_argument("--n", help="matrix size", type=int, default=None)
    parser.add_argument("--case", help="complex or real",
                        choices=('complex', 'real'), default=None)
    parser.add_argument("--eigen", help="comma separated eigenvalues",
                        default=None)
    parser.add_argument("--pairs", help="complex pairs a:b,...",
                        default=None)
    parser.add_argument("--reals", help="real eigenvalues (real case)",
                        default=None)
    parser.add_argument("--selector", help="bitmask (0b.., 0x..), index "
                        "list, or I1;I2 in the real case", default=None)
    parser.add_argument("--variant", choices=(catalog.SHIFT,
                                              catalog.SPECTRAL),
                        default=catalog.SHIFT)
    parser.add_argument("--p", help="prime (comma list for fiber)",
                        default=None)
    parser.add_argument("--torus", choices=(fforacle.SPLIT, fforacle.PAIRS),
                        default=fforacle.SPLIT)
    parser.add_argument("--k", help="number of pairs", type=int, default=0)
    parser.add_argument("--seed", type=int, default=configs.DEFAULT_SEED)
    parser.add_argument("--samples", type=int,
                        default=configs.DEFAULT_SAMPLES)
    parser.add_argument("--in", help="input file", dest="infile",
                        default=None)
    parser.add_argument("--dump", help="partition dump file", default=None)
    parser.add_argument("--json", action='store_true',
                        help="machine readable output")
    parser.add_argument("--verbose", action='store_true',
                        help="progress messages on stderr")

    args = parser.parse_args(*args)

    subs = SUB_VERBS[args.verb]
    if args.sub not in subs:
        parser.error("'" + args.verb + "' expects one of " +
                     ', '.join(str(s) for s in subs if s) +
                     ", got " + str(args.sub))
    return args


# -------------------
# flag interpretation
# -------------------

def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError("--" + name + " is required for " + args.verb +
                             " " + str(args.sub))


def _field(args, default):
    return field_from_string(args.field) if args.field else Field(default)


def _split(text):
    return [t for t in str(text).replace(' ', '').split(',') if t]


def _primes(args):
    _require(args, 'p')
    try:
        return [int(t) for t in _split(args.p)]
    except ValueError:
        raise UsageError("--p must be a prime or a comma list of primes")


def _spec(args):
    case = args.case
    if case is None:
        case = 'real' if args.pairs is not None else 'complex'
    if case == 'complex':
        _require(args, 'eigen')
        F = _field(args, GAUSS)
        a = [F.parse(t) for t in _split(args.eigen)]
        spec = catalog.ComplexOrbitSpec(len(a), a, F)
    else:
        F = Field(RAT)
        a, b = [], []
        for t in _split(args.pairs or ''):
            if ':' not in t:
                raise UsageError("pairs are written a:b")
            x, y = t.split(':', 1)
            a.append(F.parse(x))
            b.append(F.parse(y))
        c = [F.parse(t) for t in _split(args.reals or '')]
        spec = catalog.RealOrbitSpec(2 * len(a) + len(c), len(a), a, b, c, F)
    if args.n is not None and args.n != spec.n:
        raise UsageError("--n " + str(args.n) + " does not match the " +
                         str(spec.n) + " eigenvalues given")
    return spec


# --------
# commands
# --------

def cmd_classify(args):
    _require(args, 'infile')
    field = field_from_string(args.field) if args.field else None
    f = fileio.load_functional(args.infile, field)
    if hasattr(f, 'alpha'):
        inv = classify(f)
    else:
        inv = classify(moment_map(f))
    return inv.to_dict(), None


def cmd_catalog(args):
    if args.sub == 'open':
        _require(args, 'n')
        n = args.n
        F = _field(args, RAT)
        if args.variant == catalog.SHIFT:
            f = catalog.make_open_rep(n, catalog.SHIFT, field=F)
        else:
            f = catalog.make_open_rep(n, catalog.SPECTRAL,
                                      a=list(range(1, n)), b=[1] * (n - 1),
                                      field=F)
        return f.to_dict(), None

    spec = _spec(args)
    _require(args, 'selector')
    sel = catalog.parse_selector(args.selector, spec)
    image = catalog.moment_image(spec, sel)
    out = {'spec': spec.to_dict(),
           'selector': spec.selector_text(sel),
           'g': catalog.make_g_selector(spec, sel).g.to_dict(),
           'moment_image': image.to_dict(),
           'invariant': classify(image).to_dict()}
    return out, None


def cmd_verify(args):
    sub = args.sub
    if sub == 'open':
        _require(args, 'n')
        return None, catalog.verify_open_orbit(args.n, _field(args, RAT))
    elif sub == 'census':
        return None, catalog.verify_orbit_census(_spec(args))
    elif sub == 'stabilizers':
        spec = _spec(args)
        if args.selector is not None:
            sels = [catalog.parse_selector(args.selector, spec)]
        else:
            sels = spec.selectors()
        report = Report("stabilizer dimensions n - depth upstairs and "
                        "2(n - depth) downstairs")
        for sel in sels:
            report.merge(catalog.verify_stabilizer_dims(spec, sel))
        report.summary = str(len(sels)) + ' selectors, stabilizers'
        return None, report
    elif sub == 'fiber':
        spec = _spec(args)
        if args.p is None:
            args.p = DEFAULT_FIBER_PRIMES
        return None, catalog.verify_fiber(spec, _primes(args))
    elif sub == 'mackey':
        ns = [args.n] if args.n is not None else \
            range(1, MACKEY_MAX_N + 1)
        report = Report("depth of coadjoint orbits matches the Mackey depth")
        for n in ns:
            report.merge(catalog.mackey_strata_match(n))
        report.summary = 'mackey strata n=' + ','.join(str(n) for n in ns)
        return None, report
    elif sub == 'lemmas':
        _require(args, 'n')
        return None, catalog.verify_lemma_suite(
            args.n, _field(args, RAT), samples=args.samples, seed=args.seed,
            verbose=args.verbose)
    # consistency
    spec = _spec(args)
    if not isinstance(spec, catalog.RealOrbitSpec):
        raise UsageError("consistency needs real spectral data (--pairs)")
    return None, catalog.verify_real_complex_consistency(spec)


def cmd_oracle(args):
    sub = args.sub
    if sub in ('partition', 'compare', 'strata'):
        _require(args, 'n')
        p = _primes(args)[0]
        if sub == 'compare' and args.infile is not None:
            part = fileio.load_partition(args.infile, args.n, p)
        else:
            part = fforacle.enumerate_p_orbits(args.n, p,
                                               verbose=args.verbose)
        if args.dump is not None:
            fileio.save_partition(part, args.dump)
        if sub == 'partition':
            report = Report("exact P_n(F_p)-orbit partition of p_n(F_p)*")
            report.add({'n': args.n, 'p': p, 'points': part.size,
                        'orbits': len(part),
                        'orbit_sizes': sorted(part.orbit_sizes())},
                       ok=fforacle.is_saturated(part))
            report.summary = 'partition: ' + str(part.size) + ' points, ' + \
                str(len(part)) + ' orbits'
            return None, report
        elif sub == 'compare':
            return None, fforacle.compare_with_classifier(
                part, verbose=args.verbose)
        census = fforacle.stratum_census(args.n, p, part)
        report = Report("the open stratum of p_n(F_p)* is a single orbit of "
                        "size |P_n(F_p)|")
        report.add(census, ok=census['open_size'] == census['mirabolic_order']
                   and census['orbits_per_depth'][args.n] == 1)
        report.summary = 'open stratum ' + str(census['open_size']) + \
            ' of ' + str(census['points']) + ' points'
        return None, report
    elif sub == 'torus':
        _require(args, 'n')
        p = _primes(args)[0]
        count = fforacle.count_torus_orbits(args.n, p, args.torus, args.k,
                                            verbose=args.verbose)
        k = args.k if args.torus == fforacle.PAIRS else 0
        expected = 2 ** (args.n - k) - 1
        report = Report("the torus has 2^(n-k) - 1 orbits on k^n - {0}")
        report.add({'n': args.n, 'p': p, 'torus': args.torus, 'k': k,
                    'orbits': count, 'expected': expected},
                   ok=count == expected)
        report.summary = str(count) + ' torus orbits'
        return None, report
    # cosets
    spec = _spec(args)
    p = _primes(args)[0]
    count = fforacle.double_coset_count(spec.n, p, spec, verbose=args.verbose)
    torus = fforacle.count_torus_orbits(spec.n, p)
    report = Report("P-orbits on a regular semisimple G-orbit are the "
                    "double cosets P\\G/T")
    report.add({'n': spec.n, 'p': p, 'double_cosets': count,
                'torus_orbits': torus, 'expected': spec.census_size()},
               ok=count == torus == spec.census_size())
    report.summary = str(count) + ' double cosets'
    return None, report


COMMANDS = {'classify': cmd_classify,
            'catalog': cmd_catalog,
            'verify': cmd_verify,
            'oracle': cmd_oracle}


def run(argv, out=None, err=None):
    """ Run one command; returns the exit status """

    if out is None:
        out = sys.stdout
    if err is None:
        err = sys.stderr
    try:
        args = get_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    progress = err if args.verbose else open(os.devnull, 'w')
    try:
        with contextlib.redirect_stdout(progress):
            data, report = COMMANDS[args.verb](args)
    except ValueError as e:
        print('error: ' + str(e), file=err)
        return EXIT_USAGE
    except AssertionError as e:
        print('failed: ' + str(e), file=err)
        return EXIT_FAIL
    finally:
        if progress is not err:
            progress.close()

    if report is None:
        print(fileio.to_json(data), file=out)
        return EXIT_OK
    if args.json:
        print(fileio.to_json(report), file=out)
    else:
        print('claim: ' + report.claim, file=out)
        print(report.text(), file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def main(*args):
    """ Parse arguments and run the command
    """

    sys.exit(run(list(args[0]) if args else sys.argv[1:]))


# For running from the command line:
if __name__ == "__main__":
    main(sys.argv[1:])
