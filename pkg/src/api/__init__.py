"""HTTP service for minorforge analyses and verifiers."""
