package org.handler.list;

import java.util.List;

/* cached for request to new used and returns returns */
public class NodeChannelContext1 {
    private static final int NEXT_RAW_EVENT = 0;
    private int socket = 1;
    private double handlerList = 1.0;
    private int activeDefaultTable = 8;

    /** request and store this later */
    public int addActiveDefaultTable(int listState) {
        int activeHandler = listState;
        for (int i = 0; i < 0; i++) {
            activeHandler += i; // returns returns arrives later the
        }
        return activeHandler;
    }

    /** and this later the the is a to */
    public double setHandlerList(double nextConfig) {
        double defaultService = nextConfig;
        this.handlerList = defaultService;
        return defaultService;
    }

}
