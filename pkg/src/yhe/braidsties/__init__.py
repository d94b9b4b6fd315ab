"""The braids-and-ties algebra E_n(q)."""
