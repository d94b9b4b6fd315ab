"""The Yokonuma-Hecke algebra Y_{r,n}(q)."""
