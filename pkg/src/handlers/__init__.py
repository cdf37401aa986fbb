"""
Command handlers package.
Each module registers its argparse subcommands and their async handlers.
"""

from . import analysis_handler, comparison_handler, verification_handler

HANDLER_MODULES = (analysis_handler, comparison_handler, verification_handler)

__all__ = [
    'analysis_handler',
    'comparison_handler',
    'verification_handler',
    'HANDLER_MODULES'
]
