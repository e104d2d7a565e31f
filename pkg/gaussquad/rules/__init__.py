"""Rule builders for the Hermite and Laguerre families."""
