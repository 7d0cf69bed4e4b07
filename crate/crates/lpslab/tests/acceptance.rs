// acceptance criteria land here
