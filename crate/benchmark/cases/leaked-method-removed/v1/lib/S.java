package lib;

class S { public void m() {} }
