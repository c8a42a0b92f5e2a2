"""Canonical report serialization: JSON (machine), text, CSV.

JSON output is byte-deterministic for a fixed (config, seed, version):
keys are sorted, scalars are decimal strings, and no timestamps or
environment data are recorded.
"""

import csv
import io
import json

from . import __version__


def _canon(obj):
    if isinstance(obj, dict):
        return {str(k): _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        raise TypeError("floating point value in a report: %r" % (obj,))
    if isinstance(obj, str):
        return obj
    return str(obj)  # exact rationals and anything else print canonically


def report_json(command, config, results):
    doc = {
        "schema": "torvoa-report/1",
        "version": __version__,
        "command": command,
        "config": _canon(config),
        "results": _canon(results),
        "pass": bool(results.get("pass", False)),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def report_text(command, results):
    lines = ["%s: %s" % (command, "PASS" if results.get("pass") else "FAIL")]
    classes = results.get("classes")
    if classes:
        for tag in sorted(classes):
            e = classes[tag]
            alias = (" (%s)" % e["alias"]) if e.get("alias") else ""
            status = "ok" if not e["failures"] else \
                "%d FAILURES" % len(e["failures"])
            lines.append("  %-14s%-7s pairs=%-5d state-evals=%-8d %s"
                         % (tag, alias, e["pairs"], e["state_evals"], status))
            for f in e["failures"][:5]:
                lines.append("    residual at %s | %s"
                             % (f.get("pair"), f.get("state")))
    rows = results.get("rows")
    if isinstance(rows, dict):
        for tag in sorted(rows):
            e = rows[tag]
            lines.append("  %-22s cases=%-6d failures=%d"
                         % (tag, e["cases"], e["failures"]))
    if isinstance(rows, list):
        for r in rows:
            lines.append("  %-14s degree=%-3d enumerated=%-9d "
                         "coefficient=%-9d %s"
                         % (r["series"], r["degree"], r["enumerated"],
                            r["coefficient"],
                            "ok" if r["match"] else "MISMATCH"))
    for key in ("embedding", "spectrum_check", "negative_controls"):
        sub = results.get(key)
        if isinstance(sub, dict) and "pass" in sub:
            lines.append("  %-22s %s" % (key,
                                         "ok" if sub["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def rows_csv(rows):
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _canon(v) for k, v in r.items()})
    return buf.getvalue()


def emit(args, command, config, results):
    """Write the requested outputs; returns the text form."""
    text = report_text(command, results)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(report_json(command, config, results))
    if getattr(args, "csv", None) and isinstance(results.get("rows"), list):
        with open(args.csv, "w") as fh:
            fh.write(rows_csv(results["rows"]))
    if getattr(args, "text", None):
        with open(args.text, "w") as fh:
            fh.write(text)
    return text
