from hyperfields.core import members


def to_sets(h):
    return [[set(members(c)) for c in row] for row in h.add]


def idx(h, name):
    return h.names.index(name)
