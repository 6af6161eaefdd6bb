# Anchors this directory on sys.path so test modules can import `oracles`.
