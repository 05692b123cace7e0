"""Run the command line as a module: python -m jacograph ..."""

from .cli import entrypoint

entrypoint()
