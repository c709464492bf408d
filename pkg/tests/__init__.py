# Tests package for ai-sre-agent
