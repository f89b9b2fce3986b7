# -*- coding: utf-8 -*-
"""Samples

random permutations, words and pairs for sampled checks and
testing. Everything draws from numpy's global random state, so callers
seed it with np.random.seed.

"""
import numpy as np
from .errors import UsageError

def random_permutation(n):
    """a uniformly random element of S_{n+1}, in one-line notation"""
    return tuple(int(x) for x in np.random.permutation(n + 1) + 1)

def random_word(n, length):
    """a random word of generator indices 1..n

    Parameters
    ----------
    n : int
        rank
    length : int
        number of letters

    Returns
    -------
    list of int

    """
    if n < 1 or length < 0:
        raise UsageError("random_word: bad rank {} or length {}".format(n, length))
    return [int(x) for x in np.random.randint(1, n + 1, size=length)]

def random_pairs(items, count):
    """count ordered pairs drawn with replacement from items"""
    items = list(items)
    first = np.random.randint(len(items), size=count)
    second = np.random.randint(len(items), size=count)
    return [(items[a], items[b]) for a, b in zip(first, second)]
