# Configuration management package
