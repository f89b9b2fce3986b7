# -*- coding: utf-8 -*-
"""__main__.py

invoke the command dispatcher when someone types `python -m tauweave`

"""
from .application import main

exit(main() or 0)
