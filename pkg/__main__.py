"""
bierkit: exact experiments on Bier spheres and deformation cones.
Entry point for `python -m`.
"""

import os
import sys

current_dir = os.path.dirname(os.path.abspath(__file__))
if current_dir not in sys.path:
    sys.path.insert(0, current_dir)

from main import main

if __name__ == "__main__":
    sys.exit(main())
