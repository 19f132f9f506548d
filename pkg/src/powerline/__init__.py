"""Power graphs of finite groups and their line-graph structure."""
