"""The full unification pipeline on the bundled showcase corpus.

Five series from the literature are validated (exact partial sums, minimal
recurrence fit, integer-relation identification of the limit), clustered by
their dynamical metrics, connected with verified coboundary certificates,
and attached to matrix-field trajectories.
"""

import json
import tempfile
from fractions import Fraction
from importlib import resources
from pathlib import Path

from pcf_unify.cmf import pi_cmf
from pcf_unify.coboundary import MatchContext
from pcf_unify.pipeline import (
    GraphNode,
    cmf_nodes_for_directions,
    export_report,
    grow_coboundary_graph,
    ingest_corpus,
    validate_formula,
)

data = json.loads(
    resources.files("pcf_unify.data").joinpath("corpus_table1.json").read_text()
)
records = ingest_corpus(data)
print(f"ingested {len(records)} records")

ctx = MatchContext(constant="pi")
nodes, rejected = [], []
for rec in records:
    out = validate_formula(rec, ctx)
    if isinstance(out, GraphNode):
        print(f"  {rec.id}: {out.canonical_pcf}  delta={out.delta.delta:+.3f}")
        nodes.append(out)
    else:
        print(f"  {rec.id}: rejected ({out.reason})")
        rejected.append(out)

half = Fraction(1, 2)
field_nodes = cmf_nodes_for_directions(
    pi_cmf(), (half, half, half), [(1, 0, 0), (1, 1, 1)], ctx
)
graph = grow_coboundary_graph(nodes, field_nodes, ctx)

outdir = Path(tempfile.mkdtemp(prefix="pcf-unify-"))
summary = export_report(graph, outdir, rejected)
print(f"\n{summary['edge_count']} verified certificates; report under {outdir}")
for cluster in summary["clusters"]:
    root = cluster["root"]
    tag = f" (field trajectory {tuple(cluster['cmf_direction'])})" if "cmf_direction" in cluster else ""
    print(f"  {root}{tag}: {cluster['members']}")
