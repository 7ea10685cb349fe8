"""Shared configuration, errors, budgets, audit trail and JSON models."""
