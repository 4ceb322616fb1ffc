from seconet.utils.decorators import exit_codes
from seconet.utils.validation import format_number, parse_number, to_native

__all__ = ["exit_codes", "format_number", "parse_number", "to_native"]
