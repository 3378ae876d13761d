from __future__ import annotations
import datetime
import os

from jinja2 import Template

from .model import ReportDocument

_TEMPLATE = """
<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>quiverphi - {{ doc.command }}{% if doc.algebra %} - {{ doc.algebra }}{% endif %}</title>
<style>
:root {
  --pass: #059669;
  --fail: #dc2626;
  --unknown: #d97706;
  --gray-100: #f1f5f9;
  --gray-300: #cbd5e1;
  --gray-700: #334155;
}
body { font-family: -apple-system, 'Segoe UI', Roboto, sans-serif; color: var(--gray-700); margin: 2rem; }
h1 { font-size: 1.4rem; }
.meta { color: #64748b; font-size: 0.85rem; margin-bottom: 1.5rem; }
table { border-collapse: collapse; width: 100%; margin-bottom: 1.5rem; }
th, td { border: 1px solid var(--gray-300); padding: 0.4rem 0.6rem; text-align: left; vertical-align: top; }
th { background: var(--gray-100); }
.status { font-weight: 600; text-transform: uppercase; }
.status-pass { color: var(--pass); }
.status-fail { color: var(--fail); }
.status-unknown { color: var(--unknown); }
ul { margin: 0; padding-left: 1.2rem; }
code { font-family: 'JetBrains Mono', monospace; font-size: 0.85rem; }
</style>
</head>
<body>
<h1>{{ doc.command }}{% if doc.algebra %} over <code>{{ doc.algebra }}</code>{% endif %}</h1>
<div class="meta">Generated: {{ generated_formatted }} &middot; report version {{ doc.version }}
  &middot; {{ passed }} passed, {{ failed }} failed, {{ unknown }} unknown</div>

{% if doc.results %}
<h2>Results</h2>
<table>
  <thead><tr><th>Item</th><th>Value</th><th>Note</th></tr></thead>
  <tbody>
  {% for r in doc.results %}
    <tr><td><code>{{ r.item }}</code></td><td>{{ r.value }}</td><td>{{ r.note or "" }}</td></tr>
  {% endfor %}
  </tbody>
</table>
{% endif %}

{% if doc.reports %}
<h2>Checks</h2>
<table>
  <thead><tr><th>Check</th><th>Status</th><th>Details</th><th>Witnesses</th></tr></thead>
  <tbody>
  {% for c in doc.reports %}
    <tr>
      <td><code>{{ c.check }}</code></td>
      <td class="status status-{{ c.status }}">{{ c.status }}</td>
      <td><ul>{% for d in c.details %}<li>{{ d }}</li>{% endfor %}</ul></td>
      <td><ul>{% for w in c.witnesses %}<li><code>{{ w }}</code></li>{% endfor %}</ul></td>
    </tr>
  {% endfor %}
  </tbody>
</table>
{% endif %}
</body>
</html>
"""


def render_report(doc: ReportDocument, out_path: str) -> str:
    generated = datetime.datetime.now(datetime.timezone.utc)
    statuses = [c.status for c in doc.reports]
    tmpl = Template(_template_minify(_TEMPLATE), autoescape=True)
    html = tmpl.render(
        doc=doc,
        generated_formatted=generated.strftime("%B %d, %Y at %I:%M %p UTC"),
        passed=statuses.count("pass"),
        failed=statuses.count("fail"),
        unknown=statuses.count("unknown"),
    )
    folder = os.path.dirname(out_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(out_path, "w", encoding="utf-8") as f:
        f.write(html)
    return out_path


def _template_minify(s: str) -> str:
    return "\n".join(line.rstrip() for line in s.splitlines())
