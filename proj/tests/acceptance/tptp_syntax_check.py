"""Independent TPTP syntax check using the grammar shipped with tptp_lark_parser.

The packaged grammar covers CNF/FOF only. TFF problems from shacl2fol use no
TFF feature besides the `tff` keyword and `$distinct`, so those two are
rewritten to their FOF shape before parsing.

Usage: tptp_syntax_check.py FILE...   (exit 0 iff every file parses)
Exit 3 when lark or the grammar is unavailable.
"""
import os
import re
import sys

try:
    import lark
    import tptp_lark_parser
except ImportError:
    sys.exit(3)


def main(paths):
    grammar = os.path.join(os.path.dirname(tptp_lark_parser.__file__),
                           "resources", "TPTP.lark")
    parser = lark.Lark(open(grammar, encoding="utf-8").read(),
                       start="tptp_file", parser="lalr")
    failed = 0
    for path in paths:
        text = open(path, encoding="utf-8").read()
        text = re.sub(r"^tff\(", "fof(", text, flags=re.M)
        text = text.replace("$distinct(", "distinct_constants(")
        try:
            parser.parse(text)
        except lark.exceptions.LarkError as e:
            failed += 1
            print(f"FAIL {path}: {str(e).splitlines()[0]}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
