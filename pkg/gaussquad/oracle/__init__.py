"""Golub–Welsch reference rules and closed-form moments used to validate the iterative rules."""
