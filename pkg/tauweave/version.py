# -*- coding: utf-8 -*-
"""
tauweave version string and its parsed tuple; setup.py reads this file.

"""
__version__ = '0.1.0'
VERSION = tuple(int(x) for x in __version__.split('.'))
