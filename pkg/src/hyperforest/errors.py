class ResourceLimitError(RuntimeError):
    """A configured size cap (vertex count, edge count) was exceeded."""

    def __init__(self, cap_name, limit, requested):
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap_name} cap exceeded: requested {requested}, limit {limit}")
