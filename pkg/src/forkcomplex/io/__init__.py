"""Text formats, rendering and the command-line interface."""

from .dsl import (FORMAT_HEADER, ForkDocument, format_complex, format_move, parse_complex,
                  parse_document, parse_move)

__all__ = ["FORMAT_HEADER", "ForkDocument", "format_complex", "format_move",
           "parse_complex", "parse_document", "parse_move"]
