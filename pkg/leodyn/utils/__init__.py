from .tools import (as_fraction,
                    parse_rational,
                    format_rational,
                    parse_interval,
                    simplest_between,
                    simplest_in,
                    make_json_safe)
