"""State vectors, the gate/circuit IR, register layouts and resource accounting"""
