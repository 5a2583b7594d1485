"""Circuit synthesis for the modular operators and period finding"""
