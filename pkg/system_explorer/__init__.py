"""JSON web API over the ritt_groebner tools."""
