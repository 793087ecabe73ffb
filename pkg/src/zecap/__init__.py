"""Zero-error codes for channels with memory described by graphs over X^(m+1)."""
