"""Allow `python -m pteseq`."""

from .cli import main

main()
