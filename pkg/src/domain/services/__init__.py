"""Pure numerical services: Golay sequences and arrays, surface model, sweeps."""
