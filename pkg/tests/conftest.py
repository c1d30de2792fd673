import sys
from pathlib import Path

# make corpus.py importable regardless of how pytest was invoked
sys.path.insert(0, str(Path(__file__).resolve().parent))
