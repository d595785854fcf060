"""Graph document schema.

A graph document is the JSON form every CLI command reads:

    {"vertices": 3, "edges": [[0, 1], [1, 2]]}

Edges are ``[tail, head]`` pairs of 0-based vertex indices, in the order that
fixes edge numbering.
"""

from pydantic import BaseModel, Field, StrictInt


class GraphDocument(BaseModel):
    """Serialized oriented simple graph.

    Only the shape is checked here. Simplicity rules (self-loops, duplicate
    edges, index range) are enforced when the OrientedGraph is built so that
    errors can name the offending edge position.

    Attributes:
        vertices: Number of vertices
        edges: Ordered (tail, head) pairs
    """

    vertices: StrictInt = Field(ge=0)
    edges: list[tuple[StrictInt, StrictInt]] = []

    model_config = {"extra": "forbid"}
