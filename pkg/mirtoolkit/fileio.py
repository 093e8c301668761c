from __future__ import print_function

import os
import sys
import json
import pandas as pd

try:  # run as a package if installed
    from mirtoolkit import configs
    from mirtoolkit.matrixkit import Mat
    from mirtoolkit.liecore import functional_from_dict
    from mirtoolkit.fforacle import OrbitPartition
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    import configs
    from matrixkit import Mat
    from liecore import functional_from_dict
    from fforacle import OrbitPartition

PICKLE_PROTOCOL = configs.PICKLE_PROTOCOL

# ------------------------
# general utility routines
# ------------------------


def file_type(filename):
    # routine to determine filetype

    if filename.endswith('.json'):
        ftype = 'json'
    elif filename.endswith(('.txt', '.dat', '.tsv', '.asc')):
        ftype = 'text'
    elif filename.endswith('.pkl'):
        ftype = 'binary'
    else:
        raise ValueError("I don't know what to do with " + filename)

    return ftype


# -------------
# json routines
# -------------

def to_json(data):
    """ Deterministic JSON text: sorted keys, fixed indent """

    if hasattr(data, 'to_dict'):
        data = data.to_dict()
    return json.dumps(data, sort_keys=True, indent=configs.JSON_INDENT)


def load_json(filename):
    with open(filename) as f:
        return json.load(f)


def save_json(data, filename):
    with open(filename, 'w') as f:
        f.write(to_json(data))
        f.write('\n')


def load_matrix(filename, field=None):
    """ Matrix file {"field": ..., "rows": [[...], ...]} """

    return Mat.from_dict(load_json(filename), field)


def load_functional(filename, field=None):
    """ A functional file ({"kind": "pfun"|"gfun", "matrix": ...}) or a bare
        matrix file, which is read as an element of p_n*. """

    d = load_json(filename)
    if 'matrix' not in d:
        d = {'kind': 'pfun', 'matrix': d}
    if field is not None:
        if 'field' in d['matrix']:
            m = Mat.from_dict(d['matrix'])
            if m.field != field:
                m = m.change_field(field)
        else:
            m = Mat.from_dict(d['matrix'], field)
        d['matrix'] = m.to_dict()
    return functional_from_dict(d)


# --------------
# ascii routines
# --------------

def load_pd(filename):
    # based on pandas
    x = pd.read_csv(filename,
                    sep=' ',
                    header=None)
    return x


def save_pd(data, filename):
    # based on pandas
    data.to_csv(filename,
                index=None,
                header=None,
                sep=' ')


# ----------------
# generic routines
# ----------------

def save_partition(part, filename):
    """ Lines "orbit_id point_index", sorted, or a pickled DataFrame """

    df = part.to_frame()
    if file_type(filename) == 'binary':
        df.to_pickle(filename, protocol=PICKLE_PROTOCOL)
    else:
        save_pd(df, filename)


def load_partition(filename, n, p):
    if file_type(filename) == 'binary':
        df = pd.read_pickle(filename)
    else:
        df = load_pd(filename)
        df.columns = ['orbit_id', 'point_index']
    return OrbitPartition.from_frame(n, p, df)


def save(data, filename):
    if file_type(filename) == 'json':
        save_json(data, filename)
    elif isinstance(data, OrbitPartition):
        save_partition(data, filename)
    else:
        raise ValueError("Cannot save " + type(data).__name__ + " to " +
                         filename)
