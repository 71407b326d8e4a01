"""Batch front end: configs, sweeps, reference verification, mode export."""
