"""CLI front end: material files, parameter sweeps, figure reproduction."""
